#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "core/density.hpp"
#include "core/pure_state.hpp"
#include "core/shape.hpp"
#include "core/tolerances.hpp"

namespace rank2sep {

/// Minimum eigenvalue of the partial transpose across every canonical
/// bipartition. A failing report certifies entanglement; a passing report
/// asserts nothing (necessary condition only).
struct PPTReport {
  std::vector<std::pair<Bipartition, double>> per_bipartition;
  bool passed = true;
};

/// True iff every matricization that isolates a single party has second
/// singular value below tolerance relative to the first (rank-one test).
bool pure_product_oracle(const PureState& state,
                         double tolerance = tol::pure_sep);

/// Transposes the T-position indices between the row and column sides.
/// Hermiticity and trace are preserved; positivity generally is not, which
/// is the point.
Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho,
                                   const Bipartition& cut);

PPTReport ppt_check(const DensityMatrix& rho, double tolerance = tol::ppt);

/// The convex combination p'|E1'><E1'| + (1-p')|E2'><E2'| as a validated
/// density matrix; p' may sit on either endpoint.
DensityMatrix reconstruct(double p_prime, const PureState& e1p,
                          const PureState& e2p);

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace rank2sep
