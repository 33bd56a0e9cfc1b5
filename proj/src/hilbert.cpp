#include "relinv/hilbert.hpp"

#include "relinv/reynolds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace relinv {

const TablePtr& lemma31_table() {
  static const TablePtr table = VarTable::real({"a", "b"});
  return table;
}

Lemma31Polys lemma31_polys(std::uint32_t t) {
  const TablePtr& tab = lemma31_table();
  const Poly a = Poly::variable(tab, 0);
  const Poly b = Poly::variable(tab, 1);
  const Poly two = Poly::constant(tab, CycNum(2));
  const Poly product = a * a - b;  // u * du

  std::vector<Poly> F{two, two * a};
  std::vector<Poly> G{Poly::constant(tab, CycNum(1)), two * a};
  for (std::uint32_t i = 2; i <= t; ++i) {
    F.push_back(two * a * F[i - 1] - product * F[i - 2]);
    G.push_back(F[i] + product * G[i - 2]);
  }
  Poly H = t == 0 ? Poly(tab) : two * G[t - 1];
  return {F[t], G[t], std::move(H)};
}

ExponentPattern::ExponentPattern(std::uint32_t m_, std::size_t s_)
    : m(m_), alpha(m_ > 0 ? m_ - 1 : 0, std::vector<std::uint32_t>(s_, 0)) {}

std::uint64_t ExponentPattern::alpha_of(std::uint32_t j) const {
  std::uint64_t sum = 0;
  for (auto e : alpha.at(j - 1)) sum += e;
  return sum;
}

std::uint64_t ExponentPattern::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : alpha) {
    for (auto e : row) sum += e;
  }
  return sum;
}

bool ExponentPattern::is_valid() const {
  std::uint64_t weighted = 0;
  for (std::uint32_t j = 1; j < m; ++j) weighted += j * alpha_of(j);
  return weighted % m == 0;
}

bool ExponentPattern::fits_in(const ExponentPattern& other) const {
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    for (std::size_t i = 0; i < alpha[j].size(); ++i) {
      if (alpha[j][i] > other.alpha[j][i]) return false;
    }
  }
  return true;
}

ExponentPattern ExponentPattern::operator+(const ExponentPattern& other) const {
  ExponentPattern out = *this;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    for (std::size_t i = 0; i < alpha[j].size(); ++i) out.alpha[j][i] += other.alpha[j][i];
  }
  return out;
}

ExponentPattern ExponentPattern::operator-(const ExponentPattern& other) const {
  if (!other.fits_in(*this)) throw std::invalid_argument("pattern subtraction would go negative");
  ExponentPattern out = *this;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    for (std::size_t i = 0; i < alpha[j].size(); ++i) out.alpha[j][i] -= other.alpha[j][i];
  }
  return out;
}

std::string ExponentPattern::label(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    for (std::size_t i = 0; i < alpha[j].size(); ++i) {
      if (alpha[j][i] == 0) continue;
      if (!out.empty()) out += '*';
      out += "R" + std::to_string(j + 1) + "(" +
             (i < names.size() ? names[i] : "u" + std::to_string(i + 1)) + ")";
      if (alpha[j][i] > 1) out += "^" + std::to_string(alpha[j][i]);
    }
  }
  return out.empty() ? "1" : out;
}

namespace {

// True when no nonzero proper sub-multiset of `counts` has weighted sum 0 mod m.
bool counts_minimal(const std::vector<std::uint32_t>& counts, std::uint32_t m) {
  const std::uint64_t full = [&] {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }();
  std::vector<std::uint32_t> sub(counts.size(), 0);
  // Odometer over 0 <= sub <= counts.
  while (true) {
    std::size_t pos = 0;
    while (pos < sub.size() && sub[pos] == counts[pos]) sub[pos++] = 0;
    if (pos == sub.size()) return true;
    ++sub[pos];
    std::uint64_t size = 0;
    std::uint64_t weighted = 0;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      size += sub[j];
      weighted += (j + 1) * sub[j];
    }
    if (size < full && weighted % m == 0) return false;
  }
}

}  // namespace

std::vector<ExponentPattern> minimal_patterns(std::uint32_t m,
                                              const std::vector<std::vector<bool>>& allowed) {
  if (m < 2) throw std::invalid_argument("minimal_patterns: m must be at least 2");
  if (allowed.size() != m - 1) throw std::invalid_argument("minimal_patterns: need m-1 rows");
  const std::size_t s = allowed.empty() ? 0 : allowed.front().size();
  std::vector<std::vector<std::size_t>> slots(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    for (std::size_t i = 0; i < s; ++i) {
      if (allowed[j][i]) slots[j].push_back(i);
    }
  }

  std::vector<ExponentPattern> out;
  std::vector<std::uint32_t> counts(m - 1, 0);

  // Spreads counts[j] over the allowed slots of each j.
  std::function<void(std::size_t, std::size_t, std::uint32_t, ExponentPattern&)> distribute =
      [&](std::size_t j, std::size_t slot, std::uint32_t left, ExponentPattern& pat) {
        if (j == counts.size()) {
          out.push_back(pat);
          return;
        }
        const auto& js = slots[j];
        if (slot + 1 >= js.size()) {
          if (js.empty()) {
            if (left == 0) distribute(j + 1, 0, j + 1 < counts.size() ? counts[j + 1] : 0, pat);
            return;
          }
          pat.alpha[j][js[slot]] = left;
          distribute(j + 1, 0, j + 1 < counts.size() ? counts[j + 1] : 0, pat);
          pat.alpha[j][js[slot]] = 0;
          return;
        }
        for (std::uint32_t take = left + 1; take-- > 0;) {
          pat.alpha[j][js[slot]] = take;
          distribute(j, slot + 1, left - take, pat);
        }
        pat.alpha[j][js[slot]] = 0;
      };

  std::function<void(std::size_t, std::uint32_t)> choose = [&](std::size_t j, std::uint32_t budget) {
    if (j == counts.size()) {
      std::uint64_t size = 0;
      std::uint64_t weighted = 0;
      for (std::size_t k = 0; k < counts.size(); ++k) {
        size += counts[k];
        weighted += (k + 1) * counts[k];
      }
      if (size == 0 || weighted % m != 0 || !counts_minimal(counts, m)) return;
      ExponentPattern pat(m, s);
      distribute(0, 0, counts[0], pat);
      return;
    }
    const std::uint32_t cap = slots[j].empty() ? 0 : budget;
    for (std::uint32_t c = 0; c <= cap; ++c) {
      counts[j] = c;
      choose(j + 1, budget - c);
    }
    counts[j] = 0;
  };
  choose(0, m);

  std::sort(out.begin(), out.end(), [](const ExponentPattern& a, const ExponentPattern& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.alpha < b.alpha;
  });
  return out;
}

std::vector<ExponentPattern> minimal_patterns(std::uint32_t m, std::size_t s) {
  if (m < 2) throw std::invalid_argument("minimal_patterns: m must be at least 2");
  return minimal_patterns(m, std::vector<std::vector<bool>>(m - 1, std::vector<bool>(s, true)));
}

std::vector<Poly> GeneratorSet::polys() const {
  std::vector<Poly> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.poly);
  return out;
}

namespace {

bool is_scalar_multiple(const Poly& p, const Poly& q) {
  if (p.size() != q.size()) return false;
  const auto& pt = p.terms();
  const auto& qt = q.terms();
  const CycNum ratio = p.leading_coeff() / q.leading_coeff();
  auto it = qt.begin();
  for (const auto& [m, c] : pt) {
    if (it->first != m || !(c == ratio * it->second)) return false;
    ++it;
  }
  return true;
}

// Terms from the top monomial down; larger monomials sort first.
bool generator_before(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  GrlexLess less;
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return less(ib->first, ia->first);
    const auto ca = ia->second.to_string();
    const auto cb = ib->second.to_string();
    if (ca != cb) return ca < cb;
  }
  return a.size() > b.size();
}

std::string basis_name(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : "u" + std::to_string(i + 1);
}

// table[j][i] = R_j(u_i).
std::vector<std::vector<Poly>> reynolds_table(const GroupSpec& g, const std::vector<Poly>& basis) {
  std::vector<std::vector<Poly>> table(g.m);
  for (const auto& u : basis) {
    auto d = decompose(g, u);
    for (std::uint32_t j = 0; j < g.m; ++j) table[j].push_back(std::move(d.components[j]));
  }
  return table;
}

}  // namespace

GeneratorSet prune(GeneratorSet set) {
  GeneratorSet out;
  out.pruned = true;
  for (auto& e : set.elements) {
    if (e.poly.is_zero()) continue;
    const bool redundant = std::any_of(out.elements.begin(), out.elements.end(), [&](const auto& kept) {
      return is_scalar_multiple(e.poly, kept.poly);
    });
    if (!redundant) out.elements.push_back(std::move(e));
  }
  std::stable_sort(out.elements.begin(), out.elements.end(),
                   [](const auto& a, const auto& b) { return generator_before(a.poly, b.poly); });
  return out;
}

GeneratorSet main1_generators(const GroupSpec& g, const std::vector<Poly>& h_basis,
                              const std::vector<std::string>& names) {
  if (g.m != 2) {
    throw std::invalid_argument("main1 construction needs index m = 2 (got m = " +
                                std::to_string(g.m) + "); use main2");
  }
  const auto r = reynolds_table(g, h_basis);
  GeneratorSet set;
  for (std::size_t i = 0; i < h_basis.size(); ++i) {
    set.elements.push_back({r[0][i], "R0(" + basis_name(names, i) + ")"});
  }
  for (std::size_t i = 0; i < h_basis.size(); ++i) {
    for (std::size_t j = i; j < h_basis.size(); ++j) {
      std::string label = i == j ? "R1(" + basis_name(names, i) + ")^2"
                                 : "R1(" + basis_name(names, i) + ")*R1(" + basis_name(names, j) + ")";
      set.elements.push_back({r[1][i] * r[1][j], std::move(label)});
    }
  }
  return prune(std::move(set));
}

GeneratorSet main2_generators(const GroupSpec& g, const std::vector<Poly>& h_basis,
                              const std::vector<std::string>& names) {
  if (g.m < 2) throw std::invalid_argument("main2 construction needs m >= 2");
  const auto r = reynolds_table(g, h_basis);
  const std::size_t s = h_basis.size();
  GeneratorSet set;
  for (std::size_t i = 0; i < s; ++i) {
    set.elements.push_back({r[0][i], "R0(" + basis_name(names, i) + ")"});
  }
  std::vector<std::vector<bool>> allowed(g.m - 1, std::vector<bool>(s));
  for (std::uint32_t j = 1; j < g.m; ++j) {
    for (std::size_t i = 0; i < s; ++i) allowed[j - 1][i] = !r[j][i].is_zero();
  }
  for (const auto& pat : minimal_patterns(g.m, allowed)) {
    Poly product = Poly::constant(g.table, CycNum(1));
    for (std::uint32_t j = 1; j < g.m; ++j) {
      for (std::size_t i = 0; i < s; ++i) {
        if (const auto e = pat.alpha[j - 1][i]; e > 0) product *= r[j][i].pow(e);
      }
    }
    std::vector<std::string> labels(s);
    for (std::size_t i = 0; i < s; ++i) labels[i] = basis_name(names, i);
    set.elements.push_back({std::move(product), pat.label(labels)});
  }
  return prune(std::move(set));
}

}  // namespace relinv
