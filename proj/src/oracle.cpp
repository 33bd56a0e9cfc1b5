#include "relinv/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace relinv {

std::vector<std::size_t> row_reduce(CycMatrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    auto& prow = rows[rank];
    if (!prow[col].is_one()) {
      const CycNum inv = prow[col].inv();
      for (std::size_t c = col; c < cols; ++c) {
        if (!prow[c].is_zero()) prow[c] *= inv;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const CycNum factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!prow[c].is_zero()) rows[r][c] -= factor * prow[c];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

CycMatrix nullspace(CycMatrix a, std::size_t columns) {
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  CycMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycNum> v(columns);
    v[free] = CycNum(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial m(n, 0);
  // Lexicographically decreasing: the first variable takes the most first.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == n) {
      m[i] = static_cast<std::uint32_t>(left);
      out.push_back(m);
      return;
    }
    for (std::uint64_t e = left + 1; e-- > 0;) {
      m[i] = static_cast<std::uint32_t>(e);
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace {

struct DescendingGrlex {
  bool operator()(const Monomial& a, const Monomial& b) const { return GrlexLess{}(b, a); }
};

std::vector<Poly> rows_to_polys(const TablePtr& table, const CycMatrix& rows,
                                const std::vector<Monomial>& columns) {
  std::vector<Poly> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Poly p(table);
    for (std::size_t c = 0; c < columns.size(); ++c) p.add_term(columns[c], row[c]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Poly> echelon_basis(const TablePtr& table, const std::vector<Poly>& polys) {
  std::map<Monomial, std::size_t, DescendingGrlex> index;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) index.try_emplace(m, 0);
  }
  std::vector<Monomial> columns;
  columns.reserve(index.size());
  for (auto& [m, i] : index) {
    i = columns.size();
    columns.push_back(m);
  }
  CycMatrix rows;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    std::vector<CycNum> row(columns.size());
    for (const auto& [m, c] : p.terms()) row[index.at(m)] = c;
    rows.push_back(std::move(row));
  }
  row_reduce(rows);
  return rows_to_polys(table, rows, columns);
}

GradedSpace invariants_up_to_degree(const GroupSpec& g, std::uint64_t d) {
  std::vector<const LinearMap*> maps;
  std::vector<const TorusWeights*> tori;
  for (const auto& gen : g.h_generators) {
    if (const auto* lin = std::get_if<LinearMap>(&gen)) {
      maps.push_back(lin);
    } else {
      tori.push_back(&std::get<TorusWeights>(gen));
    }
  }
  maps.push_back(&g.delta);

  GradedSpace space;
  space.degree_bound = d;
  for (std::uint64_t deg = 0; deg <= d; ++deg) {
    std::vector<Monomial> candidates;
    for (auto& m : monomials_of_degree(g.table->size(), deg)) {
      const bool weight_zero = std::all_of(tori.begin(), tori.end(),
                                           [&](const TorusWeights* t) { return t->monomial_invariant(m); });
      if (weight_zero) candidates.push_back(std::move(m));
    }
    // One equation per (map, monomial) coefficient of f o L - f.
    std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
    CycMatrix equations;
    for (std::size_t col = 0; col < candidates.size(); ++col) {
      const Poly mono = Poly::monomial(g.table, candidates[col]);
      for (std::size_t k = 0; k < maps.size(); ++k) {
        const Poly diff = substitute_linear(mono, *maps[k]) - mono;
        for (const auto& [m, c] : diff.terms()) {
          auto [it, inserted] = row_of.try_emplace({k, m}, equations.size());
          if (inserted) equations.emplace_back(candidates.size());
          equations[it->second][col] = c;
        }
      }
    }
    auto kernel = nullspace(std::move(equations), candidates.size());
    row_reduce(kernel);
    space.bases.push_back(rows_to_polys(g.table, kernel, candidates));
  }
  return space;
}

GradedSpace subalgebra_span(const TablePtr& table, const std::vector<Poly>& gens, std::uint64_t d) {
  std::vector<Poly> pieces;
  for (const auto& gen : gens) {
    if (gen.is_zero()) continue;
    for (long deg = 1; deg <= gen.degree(); ++deg) {
      Poly piece = homogeneous_component(gen, static_cast<std::uint64_t>(deg));
      if (!piece.is_zero()) pieces.push_back(std::move(piece));
    }
  }
  GradedSpace space;
  space.degree_bound = d;
  space.bases.push_back({Poly::constant(table, CycNum(1))});
  for (std::uint64_t deg = 1; deg <= d; ++deg) {
    // span of degree-deg products = sum over pieces of piece * span[deg - deg(piece)]
    std::vector<Poly> products;
    for (const auto& piece : pieces) {
      const auto pd = static_cast<std::uint64_t>(piece.degree());
      if (pd > deg) continue;
      for (const auto& b : space.bases[deg - pd]) products.push_back(piece * b);
    }
    space.bases.push_back(echelon_basis(table, products));
  }
  return space;
}

CertReport certify(const GroupSpec& g, const std::vector<Poly>& gens, std::uint64_t d) {
  const GradedSpace oracle = invariants_up_to_degree(g, d);
  const GradedSpace span = subalgebra_span(g.table, gens, d);
  CertReport report;
  report.degree_bound = d;
  for (std::uint64_t deg = 0; deg <= d; ++deg) {
    const auto& ob = oracle.bases[deg];
    const auto& sb = span.bases[deg];
    const bool equal = ob == sb;
    report.rows.push_back({deg, ob.size(), sb.size(), equal});
    if (equal || report.first_failure) continue;
    report.first_failure = deg;
    // Prefer an invariant the generators miss; otherwise a non-invariant product.
    for (const auto& b : ob) {
      auto extended = sb;
      extended.push_back(b);
      if (echelon_basis(g.table, extended).size() > sb.size()) {
        report.witness = b;
        break;
      }
    }
    if (!report.witness) {
      for (const auto& b : sb) {
        auto extended = ob;
        extended.push_back(b);
        if (echelon_basis(g.table, extended).size() > ob.size()) {
          report.witness = b;
          report.witness_outside_oracle = true;
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace relinv
