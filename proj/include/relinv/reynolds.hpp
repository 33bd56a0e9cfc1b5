#pragma once

#include "relinv/group.hpp"

#include <vector>

namespace relinv {

/// The components (f_0, ..., f_{m-1}) of f, with f_j the sigma^j-relative
/// invariant part.
struct Decomposition {
  Poly source;
  std::vector<Poly> components;

  Poly sum() const;
};

/// R_j(f) = (1/m) sum_k conj(sigma(delta)^(jk)) * (f o delta^k).
///
/// The formula is applied as written to any input; the projection properties
/// only hold for H-invariant f, which is not checked here.
/// Throws std::out_of_range unless 0 <= j < m.
Poly reynolds(const GroupSpec& g, long j, const Poly& f);

/// f o h == f for every H generator and f o delta == sigma(delta)^j * f.
bool is_relative_invariant(const GroupSpec& g, long j, const Poly& f);

struct DecomposeOptions {
  /// Re-check the sum identity and relative invariance of every component.
  bool verify = false;
  /// Evaluate the m components on separate threads.
  bool parallel = false;
};

/// All m Reynolds projections of f. With options.verify a failed check
/// throws std::logic_error.
Decomposition decompose(const GroupSpec& g, const Poly& f, DecomposeOptions options = {});

}  // namespace relinv
