#include "relinv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace relinv {

namespace {

using UPoly = std::vector<Rational>;  // lowest degree first

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of `p` modulo the monic integer polynomial `mod`.
void reduce_monic(UPoly& p, const std::vector<Integer>& mod) {
  const std::size_t deg = mod.size() - 1;
  for (std::size_t top = p.size(); top-- > deg;) {
    if (p[top] == 0) continue;
    const Rational lead = p[top];
    const std::size_t shift = top - deg;
    for (std::size_t i = 0; i <= deg; ++i) {
      p[shift + i] -= lead * mod[i];
    }
  }
  p.resize(deg);
}

// Quotient and remainder over Q; `b` must be nonzero after trimming.
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  trim(a);
  UPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = 1 / b.back();
  for (std::size_t top = a.size(); top-- >= b.size();) {
    if (a[top] == 0) continue;
    const Rational factor = a[top] * lead_inv;
    const std::size_t shift = top - (b.size() - 1);
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
  }
  trim(a);
  return {q, a};
}

UPoly sub_mul(const UPoly& a, const UPoly& q, const UPoly& b) {
  UPoly out(std::max(a.size(), q.size() + b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

std::vector<Integer> compute_cyclotomic(std::uint32_t n) {
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<Integer> q(num.size() - dd, Integer(0));
    for (std::size_t top = num.size(); top-- > dd;) {
      const Integer lead = num[top];
      if (lead == 0) continue;
      q[top - dd] = lead;
      for (std::size_t i = 0; i <= dd; ++i) num[top - dd + i] -= lead * div[i];
    }
    num = std::move(q);
  }
  return num;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::uint32_t order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  // Computed outside the lock: the recursion re-enters this function.
  std::vector<Integer> phi =
      order == 1 ? std::vector<Integer>{Integer(-1), Integer(1)} : compute_cyclotomic(order);
  std::lock_guard lock(mutex);
  return cache.try_emplace(order, std::move(phi)).first->second;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycNum::CycNum() : order_(1), coeffs_{Rational(0)} {}

CycNum::CycNum(long value) : order_(1), coeffs_{Rational(value)} {}

CycNum::CycNum(Rational value) : order_(1), coeffs_{std::move(value)} {
  coeffs_[0].canonicalize();
}

CycNum::CycNum(std::uint32_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  demote();
}

CycNum CycNum::from_powers(std::uint32_t order, std::span<const Rational> powers) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be positive");
  UPoly folded(order, Rational(0));
  for (std::size_t k = 0; k < powers.size(); ++k) folded[k % order] += powers[k];
  reduce_monic(folded, cyclotomic_polynomial(order));
  return CycNum(order, std::move(folded));
}

void CycNum::demote() {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return;
  }
  order_ = 1;
  coeffs_.resize(1);
}

bool CycNum::is_zero() const {
  return order_ == 1 && coeffs_[0] == 0;
}

bool CycNum::is_one() const {
  return order_ == 1 && coeffs_[0] == 1;
}

std::size_t CycNum::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

CycNum CycNum::lifted(std::uint32_t new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) {
    throw std::invalid_argument("cannot lift Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                std::to_string(new_order) + ")");
  }
  const std::uint32_t stride = new_order / order_;
  UPoly powers(static_cast<std::size_t>(new_order), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) powers[k * stride] = coeffs_[k];
  reduce_monic(powers, cyclotomic_polynomial(new_order));
  CycNum out;
  out.order_ = new_order;
  out.coeffs_ = std::move(powers);
  return out;
}

CycNum CycNum::conj() const {
  if (order_ <= 2) return *this;
  UPoly powers(order_, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    powers[(order_ - k) % order_] = coeffs_[k];
  }
  reduce_monic(powers, cyclotomic_polynomial(order_));
  return CycNum(order_, std::move(powers));
}

CycNum CycNum::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (order_ == 1) return CycNum(Rational(1) / coeffs_[0]);
  // Extended Euclid: s * a + t * phi = 1 in Q[x].
  const auto& phi_int = cyclotomic_polynomial(order_);
  UPoly phi(phi_int.begin(), phi_int.end());
  UPoly r0 = phi;
  UPoly r1 = coeffs_;
  trim(r1);
  UPoly s0;
  UPoly s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    UPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("cyclotomic inverse: nontrivial gcd with Phi_N");
  }
  const Rational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  UPoly powers = std::move(s1);
  if (powers.size() < phi.size() - 1) powers.resize(phi.size() - 1, Rational(0));
  reduce_monic(powers, phi_int);
  return CycNum(order_, std::move(powers));
}

CycNum CycNum::pow(long exponent) const {
  if (exponent < 0) return inv().pow(-exponent);
  CycNum result(1);
  CycNum base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  if (order_ == other.order_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  } else {
    const auto common = std::lcm(order_, other.order_);
    CycNum a = lifted(common);
    const CycNum b = other.lifted(common);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
    *this = std::move(a);
  }
  demote();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  return *this += -other;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  if (order_ == 1 && other.order_ == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  if (other.order_ == 1) {
    for (auto& c : coeffs_) c *= other.coeffs_[0];
    demote();
    return *this;
  }
  if (order_ == 1) {
    const Rational scale = coeffs_[0];
    *this = other;
    for (auto& c : coeffs_) c *= scale;
    demote();
    return *this;
  }
  const auto common = std::lcm(order_, other.order_);
  const CycNum a = lifted(common);
  const CycNum b = other.lifted(common);
  UPoly prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  reduce_monic(prod, cyclotomic_polynomial(common));
  *this = CycNum(common, std::move(prod));
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  // Demotion makes rational values unique, so a rational never equals a
  // non-rational value.
  if (a.order_ == 1 || b.order_ == 1) return false;
  const auto common = std::lcm(a.order_, b.order_);
  return a.lifted(common).coeffs_ == b.lifted(common).coeffs_;
}

std::string CycNum::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "zeta(" + std::to_string(order_) + ")";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return first ? "0" : out;
}

CycNum root_of_unity(long k, std::uint32_t order) {
  if (order == 0) throw std::invalid_argument("root_of_unity: order must be positive");
  const long n = static_cast<long>(order);
  const long e = ((k % n) + n) % n;
  std::vector<Rational> powers(static_cast<std::size_t>(e) + 1, Rational(0));
  powers[static_cast<std::size_t>(e)] = 1;
  return CycNum::from_powers(order, powers);
}

}  // namespace relinv
