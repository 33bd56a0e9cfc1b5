#include "relinv/oracle.hpp"
#include "relinv/reynolds.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace relinv;

namespace {

// Z4 = <i> acting on z, zb with nothing in H; delta = diag(i, -i).
GroupSpec z4_group() {
  const TablePtr t = VarTable::make({{"z", 1}, {"zb", 0}});
  const LinearMap delta(t, {{root_of_unity(1, 4), 0}, {0, root_of_unity(3, 4)}});
  return GroupSpec{t, {}, delta, 4, 1};
}

std::set<std::string> printed(const std::vector<Poly>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(print_poly(p));
  return out;
}

std::set<std::string> all_printed(const GradedSpace& s, std::uint64_t from = 1) {
  std::set<std::string> out;
  for (std::uint64_t d = from; d <= s.degree_bound; ++d) {
    for (const auto& p : s.bases[d]) out.insert(print_poly(p));
  }
  return out;
}

bool in_span(const TablePtr& t, const std::vector<Poly>& basis, const Poly& p) {
  std::vector<Poly> ext = basis;
  ext.push_back(p);
  return echelon_basis(t, ext).size() == echelon_basis(t, basis).size();
}

}  // namespace

TEST_CASE("row_reduce and nullspace") {
  CycMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto pivots = row_reduce(a);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(a.size() == 2);
  CHECK(a[0][0] == CycNum(1));
  CHECK(a[0][1] == CycNum(0));

  const CycMatrix ns = nullspace({{1, 2, 3}, {1, 0, 1}}, 3);
  REQUIRE(ns.size() == 1);
  // (-1, -1, 1)
  CHECK(ns[0][0] == CycNum(-1));
  CHECK(ns[0][1] == CycNum(-1));
  CHECK(ns[0][2] == CycNum(1));
  CHECK(nullspace({}, 2).size() == 2);
}

TEST_CASE("monomials_of_degree") {
  const auto ms = monomials_of_degree(3, 2);
  CHECK(ms.size() == 6);
  CHECK(ms.front() == Monomial{2, 0, 0});
  CHECK(ms.back() == Monomial{0, 0, 2});
  CHECK(monomials_of_degree(2, 0).size() == 1);
  CHECK(monomials_of_degree(4, 3).size() == 20);
}

TEST_CASE("brute-force invariants of Z4") {
  const GroupSpec g = z4_group();
  const GradedSpace s = invariants_up_to_degree(g, 4);
  CHECK(all_printed(s) == std::set<std::string>{"z*zb", "z^2*zb^2", "z^4", "zb^4"});
  // Enumerate z^a zb^b with a - b = 0 mod 4 directly.
  for (std::uint64_t d = 0; d <= 4; ++d) {
    std::size_t count = 0;
    for (std::uint64_t a = 0; a <= d; ++a) {
      if ((static_cast<long>(a) - static_cast<long>(d - a)) % 4 == 0) ++count;
    }
    CHECK(s.dim(d) == count);
  }
}

TEST_CASE("brute-force invariants of O(2)") {
  const LoadedSpec o2 = test::load_example("o2.json");
  const GradedSpace s = invariants_up_to_degree(o2.group, 2);
  CHECK(s.dim(0) == 1);
  CHECK(s.dim(1) == 0);
  CHECK(printed(s.bases[2]) == std::set<std::string>{"z*zb", "x^2"});

  const GradedSpace zero = invariants_up_to_degree(o2.group, 0);
  REQUIRE(zero.bases.size() == 1);
  CHECK(printed(zero.bases[0]) == std::set<std::string>{"1"});
}

TEST_CASE("subalgebra_span examples") {
  const GroupSpec g = z4_group();
  const auto& t = g.table;
  const GradedSpace span = subalgebra_span(t, {parse_poly("z*zb", t), parse_poly("z^4", t),
                                               parse_poly("zb^4", t)}, 4);
  const GradedSpace oracle = invariants_up_to_degree(g, 4);
  for (std::uint64_t d = 0; d <= 4; ++d) CHECK(span.dim(d) == oracle.dim(d));

  const GradedSpace empty = subalgebra_span(t, {}, 3);
  CHECK(empty.dim(0) == 1);
  for (std::uint64_t d = 1; d <= 3; ++d) CHECK(empty.dim(d) == 0);

  const auto xt = VarTable::real({"x"});
  const GradedSpace xs = subalgebra_span(xt, {parse_poly("x^2", xt)}, 4);
  CHECK(all_printed(xs) == std::set<std::string>{"x^2", "x^4"});
  CHECK(xs.dim(1) == 0);
  CHECK(xs.dim(3) == 0);
}

TEST_CASE("echelon_basis is canonical") {
  const auto t = VarTable::real({"x", "y"});
  const std::vector<Poly> a{parse_poly("x^2 + y^2", t), parse_poly("x^2 - y^2", t)};
  const std::vector<Poly> b{parse_poly("y^2", t), parse_poly("3*x^2 + y^2", t), parse_poly("x^2", t)};
  const auto ea = echelon_basis(t, a);
  CHECK(ea == echelon_basis(t, b));
  CHECK(echelon_basis(t, ea) == ea);
  CHECK(printed(ea) == std::set<std::string>{"x^2", "y^2"});
  CHECK(echelon_basis(t, {Poly(t)}).empty());
}

TEST_CASE("certify passes on the examples and fails with a missing generator") {
  for (const char* name : {"o2.json", "d6t2z2.json", "z3z3.json"}) {
    CAPTURE(name);
    const LoadedSpec spec = test::load_example(name);
    const GeneratorSet gens = main2_generators(spec.group, spec.h_basis);
    const CertReport r = certify(spec.group, gens.polys(), 6);
    CHECK(r.pass());
    CHECK(r.rows.size() == 7);
    CHECK_FALSE(r.witness.has_value());
  }

  const LoadedSpec z3 = test::load_example("z3z3.json");
  std::vector<Poly> gens;
  for (const auto& p : main2_generators(z3.group, z3.h_basis).polys()) {
    if (print_poly(p) != "z2^3") gens.push_back(p);
  }
  REQUIRE(gens.size() == 5);
  const CertReport r = certify(z3.group, gens, 3);
  CHECK_FALSE(r.pass());
  REQUIRE(r.first_failure.has_value());
  CHECK(*r.first_failure == 3);
  REQUIRE(r.witness.has_value());
  CHECK(print_poly(*r.witness) == "z2^3");
  CHECK_FALSE(r.witness_outside_oracle);
}

TEST_CASE("certify reports a non-invariant generator") {
  const LoadedSpec o2 = test::load_example("o2.json");
  const CertReport r = certify(o2.group, {test::P(o2, "z*zb"), test::P(o2, "x^2"), test::P(o2, "x")}, 2);
  CHECK_FALSE(r.pass());
  CHECK(*r.first_failure == 1);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness_outside_oracle);
}

TEST_CASE("oracle contains the span and its basis is invariant") {
  for (const char* name : {"o2.json", "d6t2z2.json", "z3z3.json"}) {
    CAPTURE(name);
    const LoadedSpec spec = test::load_example(name);
    const GradedSpace oracle = invariants_up_to_degree(spec.group, 5);
    std::vector<Poly> gens;
    for (const auto& u : spec.h_basis) gens.push_back(reynolds(spec.group, 0, u));
    const GradedSpace span = subalgebra_span(spec.group.table, gens, 5);
    for (std::uint64_t d = 0; d <= 5; ++d) {
      for (const auto& p : oracle.bases[d]) {
        CHECK(p.is_homogeneous());
        CHECK(p.degree() == static_cast<long>(d));
        CHECK(is_relative_invariant(spec.group, 0, p));
      }
      for (const auto& p : span.bases[d]) CHECK(in_span(spec.group.table, oracle.bases[d], p));
    }
  }
}
