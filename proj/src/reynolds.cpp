#include "relinv/reynolds.hpp"

#include <future>
#include <stdexcept>

namespace relinv {

namespace {

void check_index(const GroupSpec& g, long j) {
  if (j < 0 || j >= static_cast<long>(g.m)) {
    throw std::out_of_range("Reynolds index j=" + std::to_string(j) + " outside 0.." +
                            std::to_string(g.m - 1));
  }
}

Poly project(const GroupSpec& g, long j, const std::vector<Poly>& orbit) {
  Poly out(orbit.front().table());
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    // conj(zeta^(s j k)) = zeta^(-s j k)
    out += orbit[k] * g.sigma_delta_pow(-j * static_cast<long>(k));
  }
  return out * CycNum(Rational(1, g.m));
}

}  // namespace

Poly Decomposition::sum() const {
  Poly total(source.table());
  for (const auto& c : components) total += c;
  return total;
}

Poly reynolds(const GroupSpec& g, long j, const Poly& f) {
  check_index(g, j);
  return project(g, j, coset_orbit(g, f));
}

bool is_relative_invariant(const GroupSpec& g, long j, const Poly& f) {
  check_index(g, j);
  if (!is_h_invariant(g, f)) return false;
  return substitute_linear(f, g.delta) == f * g.sigma_delta_pow(j);
}

Decomposition decompose(const GroupSpec& g, const Poly& f, DecomposeOptions options) {
  const auto orbit = coset_orbit(g, f);
  Decomposition d{f, {}};
  d.components.reserve(g.m);
  if (options.parallel && g.m > 1) {
    std::vector<std::future<Poly>> jobs;
    for (long j = 0; j < static_cast<long>(g.m); ++j) {
      jobs.push_back(std::async(std::launch::async, [&g, &orbit, j] { return project(g, j, orbit); }));
    }
    for (auto& job : jobs) d.components.push_back(job.get());
  } else {
    for (long j = 0; j < static_cast<long>(g.m); ++j) d.components.push_back(project(g, j, orbit));
  }
  if (options.verify) {
    if (!(d.sum() == f)) throw std::logic_error("decompose: components do not sum to the input");
    for (long j = 0; j < static_cast<long>(g.m); ++j) {
      if (!is_relative_invariant(g, j, d.components[j])) {
        throw std::logic_error("decompose: component " + std::to_string(j) +
                               " is not a relative invariant");
      }
    }
  }
  return d;
}

}  // namespace relinv
