#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace relinv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
/// Results are cached per order; safe to call from several threads.
const std::vector<Integer>& cyclotomic_polynomial(std::uint32_t order);

/// Euler's totient, i.e. the degree of the N-th cyclotomic polynomial.
std::uint32_t euler_phi(std::uint32_t n);

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// The value is stored as a vector of phi(N) rationals, the coordinates in the
/// power basis 1, zeta_N, ..., zeta_N^(phi(N)-1) after reduction modulo the
/// N-th cyclotomic polynomial. That representative is unique for a fixed
/// order, so equality at a common order is a plain vector comparison.
///
/// Binary operations first lift both operands to lcm(N_a, N_b). Results whose
/// value is rational are demoted to order 1, so a rational value has one
/// representation no matter where it was computed.
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(Rational value);  // NOLINT(google-explicit-constructor)

  /// Builds sum_k powers[k] * zeta_N^k; `powers` may have any length.
  static CycNum from_powers(std::uint32_t order, std::span<const Rational> powers);

  std::uint32_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return order_ == 1; }
  bool is_one() const;
  /// Only meaningful when is_rational().
  const Rational& rational() const { return coeffs_[0]; }

  /// The same value expressed in Q(zeta_M); M must be a multiple of order().
  /// Unlike every other operation the result is not demoted.
  CycNum lifted(std::uint32_t new_order) const;

  CycNum conj() const;
  CycNum inv() const;
  CycNum pow(long exponent) const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Canonical text: terms in increasing power of zeta_N, e.g.
  /// "-1/2 + 3*zeta(5)^2". Zero prints as "0".
  std::string to_string() const;
  /// Number of nonzero basis coordinates.
  std::size_t term_count() const;

 private:
  CycNum(std::uint32_t order, std::vector<Rational> coeffs);
  void demote();

  std::uint32_t order_;
  std::vector<Rational> coeffs_;
};

/// zeta_N^(k mod N). Throws std::invalid_argument when N == 0.
CycNum root_of_unity(long k, std::uint32_t order);

}  // namespace relinv
