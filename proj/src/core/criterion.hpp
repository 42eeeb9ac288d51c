#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/concurrence.hpp"
#include "core/density.hpp"
#include "core/pure_state.hpp"
#include "core/shape.hpp"
#include "core/tolerances.hpp"

namespace rank2sep {

/// One quadratic equation alpha*lambda^2 + beta*lambda + gamma = 0 attached
/// to a bipartition and an unordered pair of multi-indices. alpha is the 2x2
/// minor of E2's matricization at that index pair, gamma the same minor of
/// E1, and beta the mixed term, so that the quadratic equals the minor of
/// E1 + lambda*E2.
struct QuadraticEntry {
  Bipartition cut;
  MultiIndex index_a;
  MultiIndex index_b;
  Complex alpha{0.0, 0.0};
  Complex beta{0.0, 0.0};
  Complex gamma{0.0, 0.0};
};

/// All non-identity quadratic entries over the canonical bipartitions, each
/// unordered index pair appearing exactly once.
struct QuadraticSystem {
  std::vector<QuadraticEntry> entries;
  /// Index of the entry with the largest |alpha|, present when that maximum
  /// clears the build tolerance.
  std::optional<std::size_t> reference;
};

/// The two candidate roots of the reference quadratic and the phase theta
/// relating gamma to (1 - 1/p) * alpha across the system.
struct RootPair {
  Complex mu1{0.0, 0.0};
  Complex mu2{0.0, 0.0};
  double theta = 0.0;
};

enum class Decision { Separable, Entangled, BothEigenvectorsSeparable };

/// Names the first criterion condition that failed (empty on success) and
/// carries the achieved residuals so callers can re-apply stricter
/// thresholds after the fact.
struct Witness {
  std::string failed_condition;
  std::map<std::string, double> residuals;
};

/// Explicit separable decomposition p'|E1'><E1'| + (1-p')|E2'><E2'| with
/// per-party factorizations of both components.
struct Decomposition {
  double p_prime = 0.0;
  PureState e1_prime;
  PureState e2_prime;
  ProductFactorization factors1;
  ProductFactorization factors2;
};

struct SeparabilityVerdict {
  Decision decision = Decision::Entangled;
  std::optional<Decomposition> decomposition;
  /// Candidate roots from the reference quadratic, present once the solve
  /// stage is reached (whatever the final decision).
  std::optional<RootPair> roots;
  Witness witness;
};

/// Enumerates every canonical bipartition and every unordered index pair,
/// dropping identities where all three coefficients are below the tolerance.
QuadraticSystem build_system(const RankTwoState& state,
                             double tolerance = tol::decide);

/// Separability test for mixtures with complex amplitudes: a single global
/// phase must align gamma with (1 - 1/p)*alpha across all entries, the betas
/// must be proportional to the alphas, the reference roots must be distinct
/// common roots of every entry, and the reconstructed weight p' must be real
/// in [0,1]. Separable verdicts carry a certificate decomposition.
SeparabilityVerdict decide(const RankTwoState& state,
                           double tolerance = tol::decide);

/// Real-amplitude branch: evaluates the two closed-form discriminants and
/// reports Separable when either vanishes. Throws ComplexInput when any
/// amplitude has an imaginary part at or above the tolerance.
SeparabilityVerdict decide_real(const RankTwoState& state,
                                double tolerance = tol::decide);

/// p', E1', E2' for a given root pair, before factorization.
struct DecompositionParts {
  double p_prime = 0.0;
  PureState e1_prime;
  PureState e2_prime;
};

/// E1' = (E1 + mu1*E2)/sqrt(1+|mu1|^2), E2' likewise from mu2, and the
/// weight p' = mu2*(1+|mu1|^2)/(z - mu1*mu2*conj(z)) with z = mu2 - mu1.
/// Throws InconsistentRoots when the weight identity fails to recover the
/// input p within the tolerance.
DecompositionParts construct_decomposition(const RankTwoState& state,
                                           const RootPair& roots,
                                           double tolerance = tol::decide);

/// Certified-entanglement bound for mixtures whose second eigenvector is the
/// maximally entangled vector: p strictly below 1/2 proves entanglement.
/// Returns false outside the bound (no claim either way). Throws
/// NotOrthogonalToGhz unless e1 is orthogonal to the GHZ vector.
bool corollary_bound_check(const PureState& e1, double p,
                           double orth_tol = tol::orth);

/// concurrence(E1)/concurrence(E2); equals (1-p)/p on separable mixtures.
/// Throws E2Separable when concurrence(E2) is below the tolerance.
double concurrence_ratio(const RankTwoState& state,
                         double tolerance = tol::pure_sep);

}  // namespace rank2sep
