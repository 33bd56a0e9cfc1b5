#pragma once

#include "relinv/expr_parser.hpp"
#include "relinv/spec_file.hpp"

#include <random>
#include <string>
#include <vector>

namespace relinv::test {

inline std::string spec_path(const std::string& name) {
  return std::string(RELINV_SPEC_DIR) + "/" + name;
}

inline LoadedSpec load_example(const std::string& name) {
  return load_spec(spec_path(name));
}

inline Poly P(const LoadedSpec& spec, const std::string& src) {
  return parse_poly(src, spec.group.table);
}

/// Random polynomial combination of `basis`: up to `max_terms` terms, each a
/// small integer times a product of at most `max_factors` basis elements.
inline Poly random_combination(const std::vector<Poly>& basis, std::mt19937_64& rng,
                               int max_terms = 4, int max_factors = 3) {
  const TablePtr& table = basis.front().table();
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  std::uniform_int_distribution<int> n_factors(0, max_factors);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> coeff(-5, 5);
  Poly out(table);
  const int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    Poly term = Poly::constant(table, CycNum(coeff(rng)));
    const int factors = n_factors(rng);
    for (int f = 0; f < factors; ++f) term *= basis[pick(rng)];
    out += term;
  }
  return out;
}

/// Random CycNum in Q(zeta_order) with small rational coordinates.
inline CycNum random_cyc(std::mt19937_64& rng, std::uint32_t order) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> powers(order);
  for (auto& p : powers) p = Rational(num(rng), den(rng));
  for (auto& p : powers) p.canonicalize();
  return CycNum::from_powers(order, powers);
}

/// Random polynomial over `table` with up to `max_terms` terms of degree <= max_deg.
inline Poly random_poly(const TablePtr& table, std::mt19937_64& rng, int max_terms = 5,
                        std::uint32_t max_deg = 3, std::uint32_t order = 1) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_deg);
  Poly out(table);
  const int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m(table->size());
    for (auto& e : m) e = exp(rng);
    out.add_term(m, random_cyc(rng, order));
  }
  return out;
}

}  // namespace relinv::test
