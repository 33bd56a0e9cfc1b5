#include "relinv/reynolds.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace relinv;

namespace {

// For z3z3 every monomial is an eigenvector of delta with eigenvalue
// zeta(3)^(e(z2) - e(z2b)), so the j-th component just collects the
// monomials whose difference is j mod 3.
Poly diagonal_component(const Poly& f, long j) {
  Poly out(f.table());
  for (const auto& [mono, c] : f.terms()) {
    const long w = static_cast<long>(mono[2]) - static_cast<long>(mono[3]);
    if (((w - j) % 3 + 3) % 3 == 0) out.add_term(mono, c);
  }
  return out;
}

}  // namespace

TEST_CASE("reynolds examples") {
  const LoadedSpec o2 = test::load_example("o2.json");
  CHECK(reynolds(o2.group, 1, test::P(o2, "x")) == test::P(o2, "x"));
  CHECK(reynolds(o2.group, 0, test::P(o2, "x")).is_zero());
  CHECK(reynolds(o2.group, 0, test::P(o2, "z*zb")) == test::P(o2, "z*zb"));
  CHECK(reynolds(o2.group, 0, test::P(o2, "0")).is_zero());
  CHECK_THROWS_AS(reynolds(o2.group, 2, test::P(o2, "x")), std::out_of_range);
  CHECK_THROWS_AS(reynolds(o2.group, -1, test::P(o2, "x")), std::out_of_range);

  const LoadedSpec z3 = test::load_example("z3z3.json");
  CHECK(reynolds(z3.group, 1, test::P(z3, "z2")) == test::P(z3, "z2"));
  CHECK(reynolds(z3.group, 2, test::P(z3, "z2b")) == test::P(z3, "z2b"));
  CHECK(reynolds(z3.group, 0, test::P(z3, "z2")).is_zero());
}

TEST_CASE("is_relative_invariant examples") {
  const LoadedSpec z3 = test::load_example("z3z3.json");
  CHECK(is_relative_invariant(z3.group, 1, test::P(z3, "z2")));
  CHECK_FALSE(is_relative_invariant(z3.group, 2, test::P(z3, "z2")));
  CHECK(is_relative_invariant(z3.group, 0, test::P(z3, "z2^3")));
  CHECK(is_relative_invariant(z3.group, 0, test::P(z3, "1")));
  // z1 is not H-invariant at all.
  CHECK_FALSE(is_relative_invariant(z3.group, 0, test::P(z3, "z1")));

  const LoadedSpec o2 = test::load_example("o2.json");
  CHECK(is_relative_invariant(o2.group, 1, test::P(o2, "x*z*zb")));
  CHECK_FALSE(is_relative_invariant(o2.group, 0, test::P(o2, "x")));
}

TEST_CASE("decompose matches a per-monomial eigenvalue split") {
  const LoadedSpec z3 = test::load_example("z3z3.json");
  const Decomposition d = decompose(z3.group, test::P(z3, "z2 + z2b"));
  REQUIRE(d.components.size() == 3);
  CHECK(d.components[0].is_zero());
  CHECK(d.components[1] == test::P(z3, "z2"));
  CHECK(d.components[2] == test::P(z3, "z2b"));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly f = test::random_combination(z3.h_basis, rng);
    const Decomposition dec = decompose(z3.group, f, {.verify = true, .parallel = trial % 2 == 0});
    for (long j = 0; j < 3; ++j) CHECK(dec.components[j] == diagonal_component(f, j));
  }
}

TEST_CASE("projection properties on random H-invariants") {
  std::mt19937_64 rng(5);
  for (const char* name : {"o2.json", "d6t2z2.json", "z3z3.json"}) {
    CAPTURE(name);
    const LoadedSpec spec = test::load_example(name);
    const GroupSpec& g = spec.group;
    const long m = g.m;
    for (int trial = 0; trial < 15; ++trial) {
      const Poly f = test::random_combination(spec.h_basis, rng, 3, 2);
      const Poly p = reynolds(g, 0, test::random_combination(spec.h_basis, rng, 2, 2));
      Poly sum(g.table);
      for (long j = 0; j < m; ++j) {
        const Poly rj = reynolds(g, j, f);
        sum += rj;
        CHECK(is_relative_invariant(g, j, rj));
        CHECK(reynolds(g, j, rj) == rj);
        for (long i = 0; i < m; ++i) {
          if (i != j) CHECK(reynolds(g, i, rj).is_zero());
        }
        CHECK(reynolds(g, j, p * f) == p * rj);
      }
      CHECK(sum == f);
    }
  }
}

TEST_CASE("parallel and sequential decompositions agree") {
  const LoadedSpec spec = test::load_example("d6t2z2.json");
  std::mt19937_64 rng(8);
  const Poly f = test::random_combination(spec.h_basis, rng, 4, 3);
  const Decomposition a = decompose(spec.group, f);
  const Decomposition b = decompose(spec.group, f, {.verify = true, .parallel = true});
  CHECK(a.components == b.components);
  CHECK(a.sum() == f);
}
