#pragma once

#include <vector>

#include "core/pure_state.hpp"
#include "core/shape.hpp"
#include "core/tolerances.hpp"

namespace rank2sep {

/// Local-unitary invariants of a pure state: the quadratic invariant i0 and
/// one biquadratic per canonical bipartition, in enumeration order.
struct InvariantSet {
  double i0 = 0.0;
  std::vector<double> biquadratics;
};

InvariantSet invariants(const PureState& state);

/// Four-index definition of a single biquadratic, kept as a slow debug oracle
/// for total dimension <= 81.
double biquadratic_naive(const PureState& state, const Bipartition& cut);

/// Generalized concurrence in [0,1]: zero exactly on fully separable states.
/// Evaluated as a scaled sum of squared 2x2 minors over every canonical cut,
/// the expanded form of d*i0^2 - sum of biquadratics; the expansion is a sum
/// of squares and so stays accurate near zero where the invariant difference
/// cancels catastrophically.
double concurrence(const PureState& state);

bool is_pure_separable(const PureState& state, double tolerance = tol::pure_sep);

/// Per-party unit vectors whose tensor product, times global_phase,
/// reproduces a separable pure state.
struct ProductFactorization {
  std::vector<std::vector<Complex>> factors;
  Complex global_phase{1.0, 0.0};
};

/// Peels per-party factors out of a separable state: the fiber through the
/// maximum-modulus amplitude along each party axis, normalized, with each
/// factor's first significant entry made real positive and the leftover
/// phase collected into global_phase. Throws NotSeparable when the product
/// of the factors misses the state by more than the tolerance.
ProductFactorization factorize(const PureState& state,
                               double tolerance = tol::pure_sep);

}  // namespace rank2sep
