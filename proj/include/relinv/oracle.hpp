#pragma once

#include "relinv/group.hpp"
#include "relinv/hilbert.hpp"

#include <optional>
#include <vector>

namespace relinv {

/// Dense matrix over CycNum, indexed [row][column].
using CycMatrix = std::vector<std::vector<CycNum>>;

/// Gauss-Jordan elimination in place. Pivots are taken as the first nonzero
/// entry scanning columns left to right, normalized to 1, and cleared above
/// and below; zero rows are removed. Returns the pivot column of each row.
std::vector<std::size_t> row_reduce(CycMatrix& rows);

/// Basis of {x : A x = 0} for a matrix with `columns` columns, one vector per
/// free column.
CycMatrix nullspace(CycMatrix a, std::size_t columns);

/// All monomials of total degree d in n variables, largest (graded-lex) first.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d);

/// Reduced row echelon basis of span(polys), columns ordered from the largest
/// monomial down, so each element's leading monomial is its pivot and no
/// other element mentions that monomial. Unique for a given span.
std::vector<Poly> echelon_basis(const TablePtr& table, const std::vector<Poly>& polys);

/// Per-degree bases of a truncated graded space.
struct GradedSpace {
  std::uint64_t degree_bound = 0;
  std::vector<std::vector<Poly>> bases;  // bases[d], each in echelon form

  std::size_t dim(std::uint64_t d) const { return bases.at(d).size(); }
};

/// Gamma-invariants of each degree <= d by brute force: torus generators
/// filter monomials to weight zero, then f o L = f is solved exactly for
/// every linear H generator and for delta.
GradedSpace invariants_up_to_degree(const GroupSpec& g, std::uint64_t d);

/// Per-degree span of all products of the generators with total degree <= d.
/// Generators are split into homogeneous components first (identical for the
/// homogeneous sets the constructions produce). Degree 0 is the constants.
GradedSpace subalgebra_span(const TablePtr& table, const std::vector<Poly>& gens, std::uint64_t d);

struct CertReport {
  struct Row {
    std::uint64_t degree;
    std::size_t dim_oracle;
    std::size_t dim_span;
    bool equal;
  };
  std::uint64_t degree_bound = 0;
  std::vector<Row> rows;
  std::optional<std::uint64_t> first_failure;
  /// An invariant outside the span, or (when witness_outside_oracle) a
  /// product of generators that is not invariant at all.
  std::optional<Poly> witness;
  bool witness_outside_oracle = false;

  bool pass() const { return !first_failure.has_value(); }
};

/// PASS iff the echelon bases of the oracle and of the generated span agree
/// in every degree <= d.
CertReport certify(const GroupSpec& g, const std::vector<Poly>& gens, std::uint64_t d);

}  // namespace relinv
