#include "core/oracle.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace rank2sep {

bool pure_product_oracle(const PureState& state, double tolerance) {
  for (int k = 0; k < state.shape().num_parties; ++k) {
    const Bipartition cut = Bipartition::from_positions(state.shape(), {k});
    const Eigen::MatrixXcd a = matricize(state, cut);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const Eigen::VectorXd sv = svd.singularValues();
    if (sv.size() < 2) continue;
    if (sv(1) / sv(0) >= tolerance) return false;
  }
  return true;
}

Eigen::MatrixXcd partial_transpose(const DensityMatrix& rho,
                                   const Bipartition& cut) {
  if (cut.num_parties() != rho.shape().num_parties) {
    fail(ErrorCode::ShapeMismatch, "bipartition does not match density matrix");
  }
  const CutIndexer indexer(rho.shape(), cut);
  const auto dim = static_cast<Eigen::Index>(rho.dim());
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto [rt, rs] = indexer.split(static_cast<std::size_t>(r));
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto [ct, cs] = indexer.split(static_cast<std::size_t>(c));
      out(r, c) = rho.matrix()(
          static_cast<Eigen::Index>(indexer.merge(ct, rs)),
          static_cast<Eigen::Index>(indexer.merge(rt, cs)));
    }
  }
  return out;
}

PPTReport ppt_check(const DensityMatrix& rho, double tolerance) {
  PPTReport report;
  for (const Bipartition& cut : canonical_bipartitions(rho.shape())) {
    const Eigen::MatrixXcd pt = partial_transpose(rho, cut);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        (pt + pt.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    report.per_bipartition.emplace_back(cut, min_eig);
    if (min_eig < -tolerance) report.passed = false;
  }
  return report;
}

DensityMatrix reconstruct(double p_prime, const PureState& e1p,
                          const PureState& e2p) {
  if (!(e1p.shape() == e2p.shape())) {
    fail(ErrorCode::ShapeMismatch, "components have different shapes");
  }
  if (!(p_prime >= 0.0 && p_prime <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "weight must lie in [0,1]");
  }
  const Eigen::VectorXcd v1 = e1p.to_eigen();
  const Eigen::VectorXcd v2 = e2p.to_eigen();
  Eigen::MatrixXcd rho =
      p_prime * (v1 * v1.adjoint()) + (1.0 - p_prime) * (v2 * v2.adjoint());
  return DensityMatrix::create(e1p.shape(), std::move(rho));
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::ShapeMismatch, "matrix dimensions differ");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace rank2sep
