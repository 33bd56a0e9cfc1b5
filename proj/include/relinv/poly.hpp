#pragma once

#include "relinv/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace relinv {

/// Ordered variable names plus the conjugate pairing z_i <-> zb_i.
/// Unpaired variables are real and fixed by conjugation.
class VarTable {
 public:
  struct Var {
    std::string name;
    std::optional<std::size_t> conjugate;
  };

  /// Throws std::invalid_argument on duplicate names or a pairing that is not
  /// a fixed-point-free involution.
  explicit VarTable(std::vector<Var> vars);

  /// Convenience: all variables real.
  static std::shared_ptr<const VarTable> real(std::vector<std::string> names);
  static std::shared_ptr<const VarTable> make(std::vector<Var> vars);

  std::size_t size() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_[i].name; }
  /// Index of the conjugate variable; i itself for a real variable.
  std::size_t conjugate(std::size_t i) const { return vars_[i].conjugate.value_or(i); }
  bool is_paired(std::size_t i) const { return vars_[i].conjugate.has_value(); }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b);

 private:
  std::vector<Var> vars_;
};

using TablePtr = std::shared_ptr<const VarTable>;

/// Dense exponent vector, one entry per variable of the table.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Monomial& m);

/// Graded-lexicographic order: higher total degree is larger, ties broken
/// lexicographically with the first variable most significant.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over CycNum. Terms are kept in a map ordered by
/// GrlexLess and no stored coefficient is ever zero.
class Poly {
 public:
  using Terms = std::map<Monomial, CycNum, GrlexLess>;

  explicit Poly(TablePtr table);
  static Poly constant(TablePtr table, const CycNum& c);
  static Poly variable(TablePtr table, std::size_t index);
  static Poly monomial(TablePtr table, Monomial exps, const CycNum& c = CycNum(1));

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  long degree() const;
  bool is_homogeneous() const;
  /// Coefficient of `m`, zero when absent.
  CycNum coeff(const Monomial& m) const;
  /// Largest monomial in graded-lex order. Precondition: nonzero.
  const Monomial& leading_monomial() const;
  const CycNum& leading_coeff() const;

  /// Conjugates coefficients and swaps exponents of paired variables.
  Poly conj() const;
  Poly pow(std::uint64_t exponent) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const CycNum& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const CycNum& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const CycNum& c) { return a *= c; }
  friend Poly operator*(const CycNum& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void require_same_table(const Poly& other) const;

  TablePtr table_;
  Terms terms_;
};

/// Keeps the terms of total degree <= d.
Poly grade_truncate(const Poly& p, std::uint64_t d);
/// Keeps the terms of total degree exactly d.
Poly homogeneous_component(const Poly& p, std::uint64_t d);

/// Replaces variable i by images[i] everywhere in p. The images may live over
/// a different table; all of them must share one.
Poly compose(const Poly& p, const std::vector<Poly>& images);

/// Linear map x -> M x on coordinates, acting on polynomials by p -> p o M.
///
/// Row i of the matrix holds the coefficients of the linear form substituted
/// for variable i, so substitute_linear(p, M)(x) = p(M x). This is the right
/// action (gamma u)(x) = u(gamma x) on functions, and therefore
/// substitute_linear(substitute_linear(p, A), B) == substitute_linear(p, A * B)
/// with A * B the usual matrix product.
class LinearMap {
 public:
  using Matrix = std::vector<std::vector<CycNum>>;

  /// Matrix indexed [row][column]. Throws std::invalid_argument unless the
  /// matrix is square of the table's size.
  LinearMap(TablePtr table, Matrix matrix);
  static LinearMap identity(TablePtr table);

  const TablePtr& table() const { return table_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.size(); }

  /// The polynomial substituted for variable j.
  Poly image(std::size_t j) const;

  CycNum determinant() const;
  bool is_invertible() const { return !determinant().is_zero(); }
  bool is_identity() const;
  /// True when the image of each conjugate variable is the conjugate of the
  /// image of its partner, and images of real variables are self-conjugate.
  bool respects_conjugation() const;

  /// Matrix product this * other: substituting by `this` first and then by
  /// `other` equals substituting by the product.
  LinearMap operator*(const LinearMap& other) const;
  LinearMap pow(std::uint64_t exponent) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  TablePtr table_;
  Matrix matrix_;
};

/// p o L: every variable replaced by its image, expanded and canonicalized.
Poly substitute_linear(const Poly& p, const LinearMap& map);

}  // namespace relinv
