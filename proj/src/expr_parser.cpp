#include "relinv/expr_parser.hpp"

#include <cctype>

namespace relinv {

namespace {

constexpr std::uint64_t kMaxExponent = 10000;
constexpr std::uint32_t kMaxRootOrder = 100000;

std::string position_prefix(const SourceSpan& span) {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": ";
}

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    SourceSpan span{pos_, 0, line_, col_};
    if (pos_ >= src_.size()) return {Tok::End, {}, span};
    const char c = src_[pos_];
    auto single = [&](Tok t) {
      advance();
      span.length = 1;
      return Token{t, src_.substr(span.offset, 1), span};
    };
    switch (c) {
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '/': return single(Tok::Slash);
      case '^': return single(Tok::Caret);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      default: break;
    }
    const auto uc = static_cast<unsigned char>(c);
    if (std::isdigit(uc)) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      span.length = pos_ - span.offset;
      return {Tok::Int, src_.substr(span.offset, span.length), span};
    }
    if (std::isalpha(uc) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        advance();
      }
      span.length = pos_ - span.offset;
      return {Tok::Ident, src_.substr(span.offset, span.length), span};
    }
    span.length = 1;
    std::string shown = std::isprint(uc) ? std::string(1, c) : "\\x" + [&] {
      const char* hex = "0123456789abcdef";
      return std::string{hex[uc >> 4], hex[uc & 15]};
    }();
    throw ParseError(ParseError::Kind::InvalidCharacter, span, "invalid character '" + shown + "'");
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) {
    cur_ = lexer_.next();
    peek_ = lexer_.next();
  }

  std::unique_ptr<ExprNode> parse() {
    auto e = expr();
    if (cur_.kind != Tok::End) {
      if (starts_atom(cur_.kind)) {
        throw ParseError(ParseError::Kind::ImplicitMultiplication, cur_.span,
                         "expected '*' between factors (implicit multiplication is not supported)");
      }
      unexpected("'+', '-', '*' or end of input");
    }
    return e;
  }

 private:
  using Node = std::unique_ptr<ExprNode>;

  static bool starts_atom(Tok t) {
    return t == Tok::Ident || t == Tok::Int || t == Tok::LParen;
  }

  Token take() {
    Token t = cur_;
    cur_ = peek_;
    if (peek_.kind != Tok::End) peek_ = lexer_.next();
    return t;
  }

  [[noreturn]] void unexpected(const std::string& wanted) {
    if (cur_.kind == Tok::End) {
      throw ParseError(ParseError::Kind::UnexpectedEnd, cur_.span,
                       "unexpected end of input, expected " + wanted);
    }
    throw ParseError(ParseError::Kind::UnexpectedToken, cur_.span,
                     "unexpected " + std::string(tok_name(cur_.kind)) + " '" +
                         std::string(cur_.text) + "', expected " + wanted);
  }

  Token expect(Tok kind, const std::string& wanted) {
    if (cur_.kind != kind) unexpected(wanted);
    return take();
  }

  static SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    s.length = b.offset + b.length - a.offset;
    return s;
  }

  static Node make(ExprNode::Kind kind, SourceSpan span) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->span = span;
    return n;
  }

  Node expr() {
    Node first = term();
    if (cur_.kind != Tok::Plus && cur_.kind != Tok::Minus) return first;
    Node sum = make(ExprNode::Kind::Sum, first->span);
    sum->children.push_back(std::move(first));
    sum->negated.push_back(false);
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      Node rhs = term();
      sum->span = join(sum->span, rhs->span);
      sum->children.push_back(std::move(rhs));
      sum->negated.push_back(minus);
    }
    return sum;
  }

  Node term() {
    Node first = factor();
    if (cur_.kind != Tok::Star) return first;
    Node prod = make(ExprNode::Kind::Product, first->span);
    prod->children.push_back(std::move(first));
    while (cur_.kind == Tok::Star) {
      take();
      Node rhs = factor();
      prod->span = join(prod->span, rhs->span);
      prod->children.push_back(std::move(rhs));
    }
    return prod;
  }

  std::uint64_t natural_exponent() {
    if (cur_.kind != Tok::Int) {
      const std::string what = cur_.kind == Tok::End ? "end of input" : "'" + std::string(cur_.text) + "'";
      throw ParseError(ParseError::Kind::MalformedExponent, cur_.span,
                       "malformed exponent " + what + ": expected a nonnegative integer");
    }
    const Token t = take();
    if (t.text.size() > 6 || std::stoull(std::string(t.text)) > kMaxExponent) {
      throw ParseError(ParseError::Kind::MalformedExponent, t.span,
                       "exponent " + std::string(t.text) + " exceeds the limit of " +
                           std::to_string(kMaxExponent));
    }
    return std::stoull(std::string(t.text));
  }

  Node factor() {
    Node base = atom();
    if (cur_.kind != Tok::Caret) return base;
    take();
    const SourceSpan exp_span = cur_.span;
    const std::uint64_t e = natural_exponent();
    Node pw = make(ExprNode::Kind::Power, join(base->span, exp_span));
    pw->exponent = e;
    pw->children.push_back(std::move(base));
    return pw;
  }

  Node atom() {
    switch (cur_.kind) {
      case Tok::Minus: {
        const Token minus = take();
        Node inner = factor();
        Node neg = make(ExprNode::Kind::Negate, join(minus.span, inner->span));
        neg->children.push_back(std::move(inner));
        return neg;
      }
      case Tok::LParen: {
        const Token open = take();
        Node inner = expr();
        const Token close = expect(Tok::RParen, "')'");
        inner->span = join(open.span, close.span);
        return inner;
      }
      case Tok::Int: return number();
      case Tok::Ident:
        if (cur_.text == "zeta" && peek_.kind == Tok::LParen) return root_of_unity();
        {
          const Token t = take();
          Node v = make(ExprNode::Kind::Variable, t.span);
          v->name = std::string(t.text);
          return v;
        }
      default: unexpected("a variable, number, 'zeta(N)', '(' or '-'");
    }
  }

  Node number() {
    const Token num = take();
    if (cur_.kind != Tok::Slash) {
      Node n = make(ExprNode::Kind::Integer, num.span);
      n->numerator = Integer(std::string(num.text));
      return n;
    }
    take();
    if (cur_.kind != Tok::Int) unexpected("an integer denominator (division is only defined between integer literals)");
    const Token den = take();
    Node n = make(ExprNode::Kind::Rational, join(num.span, den.span));
    n->numerator = Integer(std::string(num.text));
    n->denominator = Integer(std::string(den.text));
    if (n->denominator == 0) {
      throw ParseError(ParseError::Kind::DivisionByZero, den.span, "division by zero in literal " +
                                                                       std::string(num.text) + "/0");
    }
    return n;
  }

  Node root_of_unity() {
    const Token kw = take();
    expect(Tok::LParen, "'('");
    if (cur_.kind != Tok::Int) unexpected("a positive integer order");
    const Token order = take();
    const Token close = expect(Tok::RParen, "')'");
    if (order.text.size() > 6 || std::stoul(std::string(order.text)) == 0 ||
        std::stoul(std::string(order.text)) > kMaxRootOrder) {
      throw ParseError(ParseError::Kind::InvalidRootOrder, order.span,
                       "root of unity order must be between 1 and " + std::to_string(kMaxRootOrder));
    }
    Node n = make(ExprNode::Kind::RootOfUnity, join(kw.span, close.span));
    n->root_order = static_cast<std::uint32_t>(std::stoul(std::string(order.text)));
    n->root_power = 1;
    if (cur_.kind != Tok::Caret) return n;
    take();
    bool negative = false;
    if (cur_.kind == Tok::Minus) {
      negative = true;
      take();
    }
    if (cur_.kind != Tok::Int) {
      throw ParseError(ParseError::Kind::MalformedExponent, cur_.span,
                       "malformed exponent: expected an integer power of zeta(" +
                           std::string(order.text) + ")");
    }
    const Token pw = take();
    // Only the residue mod the order matters.
    const Integer big(std::string(pw.text));
    const Integer reduced = big % n->root_order;
    n->root_power = static_cast<long>(reduced.get_si()) * (negative ? -1 : 1);
    n->span = join(n->span, pw.span);
    return n;
  }

  Lexer lexer_;
  Token cur_;
  Token peek_;
};

}  // namespace

ParseError::ParseError(Kind kind, SourceSpan span, const std::string& message)
    : std::runtime_error(position_prefix(span) + message), kind_(kind), span_(span), detail_(message) {}

std::unique_ptr<ExprNode> parse_expr(std::string_view src) {
  return Parser(src).parse();
}

Poly lower(const ExprNode& node, const TablePtr& table) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::Variable: {
      const auto idx = table->find(node.name);
      if (!idx) {
        throw ParseError(ParseError::Kind::UnknownVariable, node.span,
                         "unknown variable '" + node.name + "'");
      }
      return Poly::variable(table, *idx);
    }
    case K::Integer: return Poly::constant(table, CycNum(Rational(node.numerator)));
    case K::Rational: {
      return Poly::constant(table, CycNum(Rational(node.numerator, node.denominator)));
    }
    case K::RootOfUnity: return Poly::constant(table, root_of_unity(node.root_power, node.root_order));
    case K::Negate: return -lower(*node.children.front(), table);
    case K::Sum: {
      Poly out(table);
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (node.negated[i]) {
          out -= lower(*node.children[i], table);
        } else {
          out += lower(*node.children[i], table);
        }
      }
      return out;
    }
    case K::Product: {
      Poly out = lower(*node.children.front(), table);
      for (std::size_t i = 1; i < node.children.size(); ++i) out *= lower(*node.children[i], table);
      return out;
    }
    case K::Power: return lower(*node.children.front(), table).pow(node.exponent);
  }
  throw std::logic_error("unhandled expression node");
}

Poly parse_poly(std::string_view src, const TablePtr& table) {
  return lower(*parse_expr(src), table);
}

CycNum parse_scalar(std::string_view src) {
  static const TablePtr empty = VarTable::make({});
  const Poly p = parse_poly(src, empty);
  return p.coeff(Monomial{});
}

namespace {

std::string monomial_text(const VarTable& table, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += table.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

// Sign and unsigned text of c * mono.
std::pair<bool, std::string> term_text(const CycNum& c, const std::string& mono) {
  auto attach = [&](std::string coeff_text, bool unit) {
    if (mono.empty()) return coeff_text;
    if (unit) return mono;
    return coeff_text + "*" + mono;
  };
  if (c.is_rational()) {
    const Rational& q = c.rational();
    const Rational mag = q < 0 ? Rational(-q) : q;
    return {q < 0, attach(mag.get_str(), mag == 1)};
  }
  if (c.term_count() == 1) {
    std::size_t k = 0;
    while (c.coeffs()[k] == 0) ++k;
    const Rational& q = c.coeffs()[k];
    const Rational mag = q < 0 ? Rational(-q) : q;
    std::string root = "zeta(" + std::to_string(c.order()) + ")";
    if (k > 1) root += "^" + std::to_string(k);
    if (mag != 1) root = mag.get_str() + "*" + root;
    return {q < 0, attach(root, false)};
  }
  return {false, attach("(" + c.to_string() + ")", false)};
}

}  // namespace

std::string print_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [negative, text] = term_text(it->second, monomial_text(*p.table(), it->first));
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += text;
    first = false;
  }
  return out;
}

}  // namespace relinv
