#include "relinv/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace relinv {

VarTable::VarTable(std::vector<Var> vars) : vars_(std::move(vars)) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v.name).second) {
      throw std::invalid_argument("duplicate variable name '" + v.name + "'");
    }
    if (!v.conjugate) continue;
    const std::size_t j = *v.conjugate;
    if (j >= vars_.size() || j == i) {
      throw std::invalid_argument("invalid conjugate pairing for '" + v.name + "'");
    }
    if (vars_[j].conjugate != i) {
      throw std::invalid_argument("conjugate pairing of '" + v.name + "' is not symmetric");
    }
  }
}

TablePtr VarTable::real(std::vector<std::string> names) {
  std::vector<Var> vars;
  vars.reserve(names.size());
  for (auto& n : names) vars.push_back({std::move(n), std::nullopt});
  return std::make_shared<const VarTable>(std::move(vars));
}

TablePtr VarTable::make(std::vector<Var> vars) {
  return std::make_shared<const VarTable>(std::move(vars));
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

bool operator==(const VarTable& a, const VarTable& b) {
  if (a.vars_.size() != b.vars_.size()) return false;
  for (std::size_t i = 0; i < a.vars_.size(); ++i) {
    if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].conjugate != b.vars_[i].conjugate) {
      return false;
    }
  }
  return true;
}

std::uint64_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

bool same_table(const TablePtr& a, const TablePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace

Poly::Poly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("polynomial needs a variable table");
}

Poly Poly::constant(TablePtr table, const CycNum& c) {
  Poly p(std::move(table));
  p.add_term(Monomial(p.table_->size(), 0), c);
  return p;
}

Poly Poly::variable(TablePtr table, std::size_t index) {
  Monomial m(table->size(), 0);
  if (index >= m.size()) throw std::out_of_range("variable index out of range");
  m[index] = 1;
  return monomial(std::move(table), std::move(m));
}

Poly Poly::monomial(TablePtr table, Monomial exps, const CycNum& c) {
  Poly p(std::move(table));
  if (exps.size() != p.table_->size()) {
    throw std::invalid_argument("exponent vector length does not match variable table");
  }
  p.add_term(exps, c);
  return p;
}

void Poly::require_same_table(const Poly& other) const {
  if (!same_table(table_, other.table_)) {
    throw std::invalid_argument("polynomials over different variable tables");
  }
}

long Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(total_degree(terms_.rbegin()->first));
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

CycNum Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNum() : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const CycNum& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::conj() const {
  Poly out(table_);
  const std::size_t n = table_->size();
  for (const auto& [m, c] : terms_) {
    Monomial swapped(n);
    for (std::size_t i = 0; i < n; ++i) swapped[table_->conjugate(i)] = m[i];
    out.terms_.emplace(std::move(swapped), c.conj());
  }
  return out;
}

Poly Poly::pow(std::uint64_t exponent) const {
  Poly result = constant(table_, CycNum(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_table(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_table(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_table(b);
  Poly out(a.table_);
  const std::size_t n = a.table_->size();
  Monomial prod(n);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const CycNum& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_table(a.table_, b.table_)) return false;
  return a.terms_ == b.terms_;
}

Poly grade_truncate(const Poly& p, std::uint64_t d) {
  Poly out(p.table());
  for (const auto& [m, c] : p.terms()) {
    if (total_degree(m) <= d) out.add_term(m, c);
  }
  return out;
}

Poly homogeneous_component(const Poly& p, std::uint64_t d) {
  Poly out(p.table());
  for (const auto& [m, c] : p.terms()) {
    if (total_degree(m) == d) out.add_term(m, c);
  }
  return out;
}

Poly compose(const Poly& p, const std::vector<Poly>& images) {
  const std::size_t n = p.table()->size();
  if (images.size() != n) throw std::invalid_argument("compose: one image per variable required");
  if (n == 0) {
    throw std::invalid_argument("compose: polynomial has no variables to substitute");
  }
  const TablePtr& target = images.front().table();
  // powers[i][e] = images[i]^e, grown on demand.
  std::vector<std::vector<Poly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Poly::constant(target, CycNum(1)));
  Poly out(target);
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
      if (m[i] > 0) term *= pw[m[i]];
    }
    out += term;
  }
  return out;
}

LinearMap::LinearMap(TablePtr table, Matrix matrix)
    : table_(std::move(table)), matrix_(std::move(matrix)) {
  const std::size_t n = table_->size();
  if (matrix_.size() != n) throw std::invalid_argument("linear map: wrong number of rows");
  for (const auto& row : matrix_) {
    if (row.size() != n) throw std::invalid_argument("linear map: matrix is not square");
  }
}

LinearMap LinearMap::identity(TablePtr table) {
  const std::size_t n = table->size();
  Matrix m(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = CycNum(1);
  return LinearMap(std::move(table), std::move(m));
}

Poly LinearMap::image(std::size_t i) const {
  Poly out(table_);
  const std::size_t n = dim();
  for (std::size_t j = 0; j < n; ++j) {
    if (matrix_[i][j].is_zero()) continue;
    Monomial m(n, 0);
    m[j] = 1;
    out.add_term(m, matrix_[i][j]);
  }
  return out;
}

CycNum LinearMap::determinant() const {
  Matrix a = matrix_;
  const std::size_t n = a.size();
  CycNum det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return CycNum();
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const CycNum inv = a[col][col].inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const CycNum factor = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

bool LinearMap::is_identity() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(matrix_[i][j] == CycNum(i == j ? 1 : 0))) return false;
    }
  }
  return true;
}

bool LinearMap::respects_conjugation() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!(image(table_->conjugate(i)) == image(i).conj())) return false;
  }
  return true;
}

LinearMap LinearMap::operator*(const LinearMap& other) const {
  if (!same_table(table_, other.table_)) {
    throw std::invalid_argument("linear maps over different variable tables");
  }
  const std::size_t n = dim();
  Matrix out(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (matrix_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += matrix_[i][k] * other.matrix_[k][j];
    }
  }
  return LinearMap(table_, std::move(out));
}

LinearMap LinearMap::pow(std::uint64_t exponent) const {
  LinearMap result = identity(table_);
  LinearMap base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return same_table(a.table_, b.table_) && a.matrix_ == b.matrix_;
}

Poly substitute_linear(const Poly& p, const LinearMap& map) {
  if (!same_table(p.table(), map.table())) {
    throw std::invalid_argument("substitute_linear: polynomial and map use different tables");
  }
  const std::size_t n = map.dim();
  if (n == 0) return p;
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(map.image(i));
  Poly out = compose(p, images);
  // compose() adopts the images' table pointer; keep the caller's.
  return out.table() == p.table() ? out : Poly(p.table()) + out;
}

}  // namespace relinv
