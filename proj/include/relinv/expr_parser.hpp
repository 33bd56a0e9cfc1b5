#pragma once

#include "relinv/poly.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relinv {

/// 1-based position of a node or token in the source text.
struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    InvalidCharacter,
    UnexpectedToken,
    UnexpectedEnd,
    ImplicitMultiplication,
    UnknownVariable,
    MalformedExponent,
    DivisionByZero,
    InvalidRootOrder,
  };

  ParseError(Kind kind, SourceSpan span, const std::string& message);

  Kind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }
  /// The message without the "line:column: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  SourceSpan span_;
  std::string detail_;
};

struct ExprNode {
  enum class Kind { Variable, Integer, Rational, RootOfUnity, Negate, Sum, Product, Power };

  Kind kind;
  SourceSpan span;
  std::string name;            // Variable
  Integer numerator;           // Integer, Rational
  Integer denominator{1};      // Rational
  std::uint32_t root_order = 0;  // RootOfUnity: zeta(root_order)^root_power
  long root_power = 1;
  std::uint64_t exponent = 0;  // Power
  /// Operands; for Sum, `negated[i]` marks subtracted operands.
  std::vector<std::unique_ptr<ExprNode>> children;
  std::vector<bool> negated;
};

/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := var | int | int '/' int | 'zeta(' nat ')' ('^' int)?
///           | '(' expr ')' | '-' factor
/// A leading minus applies to the whole following factor, so "-x^2" is -(x^2).
/// Throws ParseError.
std::unique_ptr<ExprNode> parse_expr(std::string_view src);

/// Expands an expression tree into a canonical polynomial over `table`.
/// Unknown variables raise ParseError::Kind::UnknownVariable.
Poly lower(const ExprNode& node, const TablePtr& table);

Poly parse_poly(std::string_view src, const TablePtr& table);

/// Parses an expression that must be constant (no variables).
CycNum parse_scalar(std::string_view src);

/// Canonical text: terms from the largest graded-lex monomial down, e.g.
/// "z1^2*z2b - 1/2*x + (1 + zeta(3))". Zero prints "0". The output parses
/// back to the same polynomial.
std::string print_poly(const Poly& p);

}  // namespace relinv
