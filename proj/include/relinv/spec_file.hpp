#pragma once

#include "relinv/group.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace relinv {

/// Malformed spec file. The message names the offending field, e.g.
/// "h_basis[2]: 1:5: unknown variable 'q'".
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedSpec {
  std::uint32_t cyclotomic_order = 1;
  GroupSpec group;
  std::vector<Poly> h_basis;
  std::vector<std::string> basis_names;   // u1, u2, ...
  std::vector<std::string> basis_sources;  // the expression strings as written
};

/// JSON document with keys
///   cyclotomic_order   N; every coefficient must lie in Q(zeta_N)
///   variables          [{"name": "z", "conjugate": "zb"}, {"name": "x"}, ...]
///   h_generators       [{"type": "linear", "matrix": [[...], ...]},
///                       {"type": "torus", "weights": [...] or [[...], ...]}]
///   delta              {"type": "linear", "matrix": [[...], ...]}
///   m                  index of H
///   sigma_delta_power  k with sigma(delta) = zeta_m^k
///   h_basis            ["z*zb", "x", ...]
/// Row i of a matrix lists the coefficients of the linear form that replaces
/// variable i, e.g. [["0","1"],["1","0"]] swaps z and zb. Entries are
/// expression strings (or JSON integers).
LoadedSpec parse_spec(const std::string& json_text);
LoadedSpec load_spec(const std::filesystem::path& path);

}  // namespace relinv
