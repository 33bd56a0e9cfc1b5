#include "relinv/group.hpp"

#include <numeric>
#include <sstream>

namespace relinv {

bool TorusWeights::monomial_invariant(const Monomial& m) const {
  for (const auto& w : weights) {
    long sum = 0;
    for (std::size_t v = 0; v < m.size() && v < w.size(); ++v) sum += w[v] * static_cast<long>(m[v]);
    if (sum != 0) return false;
  }
  return true;
}

bool TorusWeights::invariant(const Poly& p) const {
  for (const auto& [m, c] : p.terms()) {
    if (!monomial_invariant(m)) return false;
  }
  return true;
}

std::string describe_generator(const GroupSpec& g, std::size_t index) {
  const bool linear = std::holds_alternative<LinearMap>(g.h_generators.at(index));
  return "h" + std::to_string(index + 1) + (linear ? " (linear)" : " (torus)");
}

bool is_h_invariant(const GroupSpec& g, const Poly& p) {
  for (const auto& gen : g.h_generators) {
    if (const auto* lin = std::get_if<LinearMap>(&gen)) {
      if (!(substitute_linear(p, *lin) == p)) return false;
    } else if (!std::get<TorusWeights>(gen).invariant(p)) {
      return false;
    }
  }
  return true;
}

Poly coset_substitute(const GroupSpec& g, std::uint64_t k, const Poly& p) {
  Poly out = p;
  for (std::uint64_t i = 0; i < k; ++i) out = substitute_linear(out, g.delta);
  return out;
}

std::vector<Poly> coset_orbit(const GroupSpec& g, const Poly& p) {
  std::vector<Poly> orbit;
  orbit.reserve(g.m);
  orbit.push_back(p);
  for (std::uint32_t k = 1; k < g.m; ++k) orbit.push_back(substitute_linear(orbit.back(), g.delta));
  return orbit;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& line : passed) out << "ok: " << line << '\n';
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  for (const auto& e : errors) out << "error: " << e.message << '\n';
  out << (ok() ? "valid" : "invalid") << '\n';
  return out.str();
}

ValidationReport validate_spec(const GroupSpec& g, const std::vector<Poly>& h_basis,
                               const std::vector<std::string>& basis_names) {
  using Kind = ValidationIssue::Kind;
  ValidationReport report;
  auto name = [&](std::size_t i) {
    return i < basis_names.size() ? basis_names[i] : "u" + std::to_string(i + 1);
  };
  auto fail = [&](Kind kind, std::string msg) { report.errors.push_back({kind, std::move(msg)}); };

  if (h_basis.empty()) fail(Kind::EmptyBasis, "h_basis is empty");

  // sigma(delta) must be a primitive m-th root of unity.
  const long k = ((g.sigma_power % static_cast<long>(g.m)) + g.m) % g.m;
  if (g.m < 2) {
    fail(Kind::SigmaNotPrimitive, "index m must be at least 2");
  } else if (std::gcd(k, static_cast<long>(g.m)) != 1) {
    fail(Kind::SigmaNotPrimitive, "σ(δ) not primitive: zeta(" + std::to_string(g.m) + ")^" +
                                      std::to_string(g.sigma_power) + " has order " +
                                      std::to_string(g.m / std::gcd(k, static_cast<long>(g.m))));
  } else {
    report.passed.push_back("σ(δ) = zeta(" + std::to_string(g.m) + ")^" +
                            std::to_string(g.sigma_power) + " is a primitive root of unity");
  }

  // Linear maps: invertible and compatible with the real structure.
  auto check_map = [&](const LinearMap& map, const std::string& label) {
    bool good = true;
    if (!map.is_invertible()) {
      fail(Kind::NotInvertible, label + " is not invertible");
      good = false;
    }
    if (!map.respects_conjugation()) {
      fail(Kind::ConjugationMismatch, label + " does not commute with complex conjugation");
      good = false;
    }
    return good;
  };
  bool maps_ok = check_map(g.delta, "δ");
  for (std::size_t i = 0; i < g.h_generators.size(); ++i) {
    const std::string label = describe_generator(g, i);
    if (const auto* lin = std::get_if<LinearMap>(&g.h_generators[i])) {
      maps_ok = check_map(*lin, label) && maps_ok;
      continue;
    }
    const auto& torus = std::get<TorusWeights>(g.h_generators[i]);
    for (std::size_t p = 0; p < torus.weights.size(); ++p) {
      const auto& w = torus.weights[p];
      if (w.size() != g.table->size()) {
        fail(Kind::TorusWeightMismatch, label + ": parameter " + std::to_string(p + 1) +
                                            " needs one weight per variable");
        maps_ok = false;
        continue;
      }
      for (std::size_t v = 0; v < w.size(); ++v) {
        const std::size_t c = g.table->conjugate(v);
        if (w[c] != -w[v]) {
          fail(Kind::TorusWeightMismatch,
               label + ": weight of " + g.table->name(c) + " must be the negative of the weight of " +
                   g.table->name(v) + " (parameter " + std::to_string(p + 1) + ")");
          maps_ok = false;
        }
      }
    }
  }
  if (maps_ok) report.passed.push_back("generators and δ are invertible and conjugation-compatible");

  // (a) basis elements fixed by H.
  bool h_ok = true;
  for (std::size_t b = 0; b < h_basis.size(); ++b) {
    for (std::size_t i = 0; i < g.h_generators.size(); ++i) {
      bool fixed;
      if (const auto* lin = std::get_if<LinearMap>(&g.h_generators[i])) {
        fixed = substitute_linear(h_basis[b], *lin) == h_basis[b];
      } else {
        fixed = std::get<TorusWeights>(g.h_generators[i]).invariant(h_basis[b]);
      }
      if (!fixed) {
        fail(Kind::NotHInvariant, name(b) + " is not fixed by " + describe_generator(g, i));
        h_ok = false;
      }
    }
  }
  if (h_ok) report.passed.push_back("every basis element is fixed by every H generator");

  // (b) delta^m acts trivially on the basis.
  bool power_ok = true;
  bool delta_trivial = !h_basis.empty();
  for (std::size_t b = 0; b < h_basis.size(); ++b) {
    const auto orbit = coset_orbit(g, h_basis[b]);
    if (!(orbit.size() > 1 && orbit[1] == h_basis[b])) delta_trivial = false;
    if (!(substitute_linear(orbit.back(), g.delta) == h_basis[b])) {
      fail(Kind::DeltaPowerNotTrivial, name(b) + " is not fixed by δ^" + std::to_string(g.m));
      power_ok = false;
    }
  }
  if (power_ok) report.passed.push_back("δ^" + std::to_string(g.m) + " fixes every basis element");
  if (delta_trivial) {
    report.warnings.push_back("δ acts trivially on the basis; every R_j with j > 0 vanishes");
  }
  return report;
}

}  // namespace relinv
