#pragma once

#include <Eigen/Dense>

#include "core/pure_state.hpp"
#include "core/shape.hpp"
#include "core/tolerances.hpp"

namespace rank2sep {

/// Validated density operator: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  static DensityMatrix create(const PartyShape& shape, Eigen::MatrixXcd entries,
                              double herm_tol = tol::herm,
                              double trace_tol = tol::norm,
                              double psd_tol = tol::psd);

  static DensityMatrix from_pure(const PureState& state);

  const PartyShape& shape() const { return shape_; }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }

 private:
  DensityMatrix(PartyShape shape, Eigen::MatrixXcd entries)
      : shape_(shape), entries_(std::move(entries)) {}

  PartyShape shape_;
  Eigen::MatrixXcd entries_;
};

/// Rank-two mixture p|E1><E1| + (1-p)|E2><E2| with orthonormal eigenvectors
/// and p in (0,1).
class RankTwoState {
 public:
  static RankTwoState create(double p, PureState e1, PureState e2,
                             double orth_tol = tol::orth);

  const PartyShape& shape() const { return e1_.shape(); }
  double p() const { return p_; }
  const PureState& e1() const { return e1_; }
  const PureState& e2() const { return e2_; }

  /// The density matrix p|E1><E1| + (1-p)|E2><E2|.
  DensityMatrix assemble() const;

 private:
  RankTwoState(double p, PureState e1, PureState e2)
      : p_(p), e1_(std::move(e1)), e2_(std::move(e2)) {}

  double p_;
  PureState e1_;
  PureState e2_;
};

/// Recovers (p, E1, E2) from a rank-two density matrix. Eigenvectors are
/// ordered by descending eigenvalue (so p >= 1/2), degenerate pairs ordered
/// by lexicographically largest phase-fixed amplitudes, and each eigenvector
/// has its first significant amplitude made real positive.
RankTwoState rank_two_extract(const DensityMatrix& rho,
                              double tolerance = tol::extract);

}  // namespace rank2sep
