#include "relinv/expr_parser.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace relinv;

namespace {

TablePtr table() {
  return VarTable::make({{"z1", 1}, {"z1b", 0}, {"z2", 3}, {"z2b", 2}, {"z3", 5}, {"z3b", 4},
                         {"x", std::nullopt}});
}

ParseError parse_failure(const std::string& src) {
  try {
    parse_poly(src, table());
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << src);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("parse examples") {
  const auto t = table();
  CHECK(parse_poly("z1*z1b", t) == Poly::monomial(t, {1, 1, 0, 0, 0, 0, 0}));
  const Poly u4 = parse_poly("z1*z2*z3 + z1b*z2b*z3b", t);
  CHECK(u4.size() == 2);
  CHECK(u4.coeff({1, 0, 1, 0, 1, 0, 0}) == CycNum(1));
  CHECK(u4.coeff({0, 1, 0, 1, 0, 1, 0}) == CycNum(1));
  CHECK(parse_poly("zeta(3)^2 * x^0", t) == Poly::constant(t, root_of_unity(2, 3)));
  CHECK(parse_poly("-x^2", t) == -parse_poly("x*x", t));
  CHECK(parse_poly("(x + 1)^2", t) == parse_poly("x^2 + 2*x + 1", t));
  CHECK(parse_poly("  x\n +\t1/2 ", t) == parse_poly("x + 1/2", t));
  CHECK(parse_poly("zeta(4)^-1", t) == Poly::constant(t, root_of_unity(3, 4)));
  CHECK(parse_poly("zeta(4)^6", t) == Poly::constant(t, CycNum(-1)));
  CHECK(parse_poly("x - -x", t) == parse_poly("2*x", t));
  CHECK(parse_poly("2*-x", t) == parse_poly("-2*x", t));
}

TEST_CASE("parse_scalar") {
  CHECK(parse_scalar("1/2 + zeta(3)") == CycNum(Rational(1, 2)) + root_of_unity(1, 3));
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("diagnostics carry a kind and a position") {
  using K = ParseError::Kind;
  struct Case {
    std::string src;
    K kind;
    std::size_t line;
    std::size_t column;
  };
  const std::vector<Case> cases{
      {"x + $", K::InvalidCharacter, 1, 5},
      {"x + )", K::UnexpectedToken, 1, 5},
      {"x +", K::UnexpectedEnd, 1, 4},
      {"z1 z2", K::ImplicitMultiplication, 1, 4},
      {"x*(z1)(z2)", K::ImplicitMultiplication, 1, 7},
      {"x +\n  q", K::UnknownVariable, 2, 3},
      {"x^y", K::MalformedExponent, 1, 3},
      {"x^-1", K::MalformedExponent, 1, 3},
      {"x^99999999", K::MalformedExponent, 1, 3},
      {"3/0", K::DivisionByZero, 1, 3},
      {"zeta(0)", K::InvalidRootOrder, 1, 6},
  };
  for (const auto& c : cases) {
    CAPTURE(c.src);
    const ParseError e = parse_failure(c.src);
    CHECK(e.kind() == c.kind);
    CHECK(e.span().line == c.line);
    CHECK(e.span().column == c.column);
    const std::string prefix = std::to_string(c.line) + ":" + std::to_string(c.column) + ": ";
    CHECK(std::string(e.what()).rfind(prefix, 0) == 0);
    CHECK(std::string(e.what()) == prefix + e.detail());
  }
  CHECK(parse_failure("x + q").detail() == "unknown variable 'q'");
}

TEST_CASE("print examples") {
  const auto t = table();
  CHECK(print_poly(Poly(t)) == "0");
  CHECK(print_poly(parse_poly("x*x", t)) == "x^2");
  CHECK(print_poly(parse_poly("z1b*z1", t)) == "z1*z1b");
  CHECK(print_poly(parse_poly("1 - x + x^2", t)) == "x^2 - x + 1");
  CHECK(print_poly(parse_poly("-1/2*z1^2*z2b", t)) == "-1/2*z1^2*z2b");
  CHECK(print_poly(parse_poly("zeta(3)^2*x", t)) == "(-1 - zeta(3))*x");
  CHECK(print_poly(parse_poly("zeta(5)^3 + x", t)) == "x + zeta(5)^3");
}

TEST_CASE("print then parse is the identity") {
  const auto t = table();
  std::mt19937_64 rng(42);
  const std::uint32_t orders[] = {1, 3, 4, 5, 12};
  for (int trial = 0; trial < 300; ++trial) {
    const Poly p = test::random_poly(t, rng, 5, 3, orders[trial % 5]);
    const std::string s = print_poly(p);
    CAPTURE(s);
    CHECK(parse_poly(s, t) == p);
    CHECK(print_poly(parse_poly(s, t)) == s);
  }
}

TEST_CASE("parser is total on random input") {
  const auto t = table();
  const std::string alphabet = "z1bx23()+-*/^ zeta(3)\n$.0";
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int parsed = 0;
  int rejected = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::string src;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) src += alphabet[pick(rng)];
    try {
      const Poly p = parse_poly(src, t);
      CHECK(parse_poly(print_poly(p), t) == p);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.span().line >= 1);
      CHECK(e.span().column >= 1);
      CHECK(e.span().offset <= src.size());
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 20000);
  CHECK(parsed > 0);
}
