#pragma once

#include "relinv/group.hpp"

#include <compare>
#include <string>
#include <vector>

namespace relinv {

/// The bivariate polynomials F_t, G_t, H_t over the table (a, b) with
///   u^t + du^t               = F_t(R0(u), R1(u)^2)
///   sum_k u^k du^(t-k)       = G_t(R0(u), R1(u)^2)
///   u^t - du^t               = R1(u) * H_t(R0(u), R1(u)^2)
/// for index-2 subgroups, where du = u o delta.
struct Lemma31Polys {
  Poly F;
  Poly G;
  Poly H;
};

/// Shared table with the two real variables a, b used by lemma31_polys.
const TablePtr& lemma31_table();

/// Built from the recurrences
///   F_i = 2a F_{i-1} - (a^2 - b) F_{i-2},   F_0 = 2, F_1 = 2a
///   G_i = F_i + (a^2 - b) G_{i-2},          G_0 = 1, G_1 = 2a
///   H_t = 2 G_{t-1},                        H_0 = 0
/// which come from u + du = 2 R0(u) and u du = R0(u)^2 - R1(u)^2.
Lemma31Polys lemma31_polys(std::uint32_t t);

/// Exponents alpha[j-1][i] of R_j(u_{i+1}) in a product of relative
/// invariants, for 1 <= j <= m-1 and 0 <= i < s.
struct ExponentPattern {
  std::uint32_t m = 2;
  std::vector<std::vector<std::uint32_t>> alpha;

  ExponentPattern() = default;
  ExponentPattern(std::uint32_t m, std::size_t s);

  std::size_t s() const { return alpha.empty() ? 0 : alpha.front().size(); }
  /// alpha(j) = sum_i alpha[j-1][i].
  std::uint64_t alpha_of(std::uint32_t j) const;
  std::uint64_t total() const;
  /// sum_j j * alpha(j) == 0 (mod m).
  bool is_valid() const;
  bool is_zero() const { return total() == 0; }
  /// Componentwise <=.
  bool fits_in(const ExponentPattern& other) const;

  ExponentPattern operator+(const ExponentPattern& other) const;
  ExponentPattern operator-(const ExponentPattern& other) const;
  friend auto operator<=>(const ExponentPattern&, const ExponentPattern&) = default;
  friend bool operator==(const ExponentPattern&, const ExponentPattern&) = default;

  /// e.g. "R1(u1)^2*R2(u3)".
  std::string label(const std::vector<std::string>& names = {}) const;
};

/// Every nonzero valid pattern that is not the sum of two nonzero valid
/// patterns. Such a pattern has at most m letters (a longer zero-sum
/// sequence in Z_m has a proper zero-sum subsequence), so an exhaustive
/// search over total <= m is complete. Sorted by total, then
/// lexicographically.
std::vector<ExponentPattern> minimal_patterns(std::uint32_t m, std::size_t s);

/// Same, restricted to letters (j, i) with allowed[j-1][i] true.
std::vector<ExponentPattern> minimal_patterns(std::uint32_t m,
                                              const std::vector<std::vector<bool>>& allowed);

struct GeneratorSet {
  struct Element {
    Poly poly;
    std::string provenance;
  };
  std::vector<Element> elements;
  bool pruned = false;

  std::vector<Poly> polys() const;
};

/// Drops zero elements, exact duplicates and scalar multiples of earlier
/// elements, then orders by total degree and, within a degree, by the terms
/// read from the leading monomial down (larger monomials first).
GeneratorSet prune(GeneratorSet set);

/// Index-2 construction: {R0(u_i)} and {R1(u_i) R1(u_j) : i <= j}, pruned.
/// Throws std::invalid_argument when m != 2.
GeneratorSet main1_generators(const GroupSpec& g, const std::vector<Poly>& h_basis,
                              const std::vector<std::string>& names = {});

/// General construction: {R0(u_i)} together with the products
/// prod R_j(u_i)^alpha[j][i] over all minimal patterns, pruned. Letters with
/// R_j(u_i) == 0 are skipped during enumeration since they only produce zero
/// products.
GeneratorSet main2_generators(const GroupSpec& g, const std::vector<Poly>& h_basis,
                              const std::vector<std::string>& names = {});

}  // namespace relinv
