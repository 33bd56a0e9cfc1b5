#pragma once

#include "relinv/poly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace relinv {

/// Integer weights of a torus action: weights[p][v] is the weight of variable
/// v under torus parameter p. A monomial is invariant iff its weight sum is
/// zero for every parameter. Tori are only ever used as invariance filters;
/// nothing is averaged over them.
struct TorusWeights {
  std::vector<std::vector<long>> weights;

  std::size_t parameters() const { return weights.size(); }
  bool monomial_invariant(const Monomial& m) const;
  bool invariant(const Poly& p) const;
};

using HGenerator = std::variant<LinearMap, TorusWeights>;

/// Generators of H, the coset representative delta, the index m, and
/// sigma(delta) = zeta_m^sigma_power.
struct GroupSpec {
  TablePtr table;
  std::vector<HGenerator> h_generators;
  LinearMap delta;
  std::uint32_t m = 2;
  long sigma_power = 1;

  CycNum sigma_delta() const { return root_of_unity(sigma_power, m); }
  /// sigma(delta)^j.
  CycNum sigma_delta_pow(long j) const { return root_of_unity(sigma_power * j, m); }
};

/// Human-readable description of generator `index`, e.g. "h1 (linear)".
std::string describe_generator(const GroupSpec& g, std::size_t index);

/// True when p is fixed by every generator of H.
bool is_h_invariant(const GroupSpec& g, const Poly& p);

struct ValidationIssue {
  enum class Kind {
    NotHInvariant,
    DeltaPowerNotTrivial,
    SigmaNotPrimitive,
    NotInvertible,
    ConjugationMismatch,
    TorusWeightMismatch,
    EmptyBasis,
  };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<std::string> warnings;
  /// One line per check that passed, in order.
  std::vector<std::string> passed;

  bool ok() const { return errors.empty(); }
  std::string to_string() const;
};

/// Checks the setup: H-invariance of every basis element under every H
/// generator, delta^m acting trivially on the basis, primitivity of
/// sigma(delta), invertibility and conjugation compatibility of the linear
/// maps, and opposite torus weights on conjugate pairs. Failures are
/// collected in the report, never thrown. `basis_names` labels the basis
/// elements in messages (defaults to u1, u2, ...).
ValidationReport validate_spec(const GroupSpec& g, const std::vector<Poly>& h_basis,
                               const std::vector<std::string>& basis_names = {});

/// p o delta^k; k == 0 returns p.
Poly coset_substitute(const GroupSpec& g, std::uint64_t k, const Poly& p);

/// [p, p o delta, ..., p o delta^(m-1)].
std::vector<Poly> coset_orbit(const GroupSpec& g, const Poly& p);

}  // namespace relinv
