#include "core/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace rank2sep {

namespace {

bool lex_greater(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() > b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() > b[i].imag();
  }
  return false;
}

}  // namespace

DensityMatrix DensityMatrix::create(const PartyShape& shape,
                                    Eigen::MatrixXcd entries, double herm_tol,
                                    double trace_tol, double psd_tol) {
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  if (entries.rows() != dim || entries.cols() != dim) {
    std::ostringstream msg;
    msg << "expected a " << dim << "x" << dim << " matrix, got "
        << entries.rows() << "x" << entries.cols();
    fail(ErrorCode::ShapeMismatch, msg.str());
  }
  if (!entries.allFinite()) {
    fail(ErrorCode::InvalidArgument, "density matrix has non-finite entries");
  }
  const double herm_dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > herm_tol) {
    std::ostringstream msg;
    msg << "matrix deviates from Hermitian by " << herm_dev;
    fail(ErrorCode::NotDensityMatrix, msg.str());
  }
  const Complex tr = entries.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > trace_tol) {
    std::ostringstream msg;
    msg << "trace " << tr.real() << " deviates from 1";
    fail(ErrorCode::NotDensityMatrix, msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      (entries + entries.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -psd_tol) {
    std::ostringstream msg;
    msg << "matrix has eigenvalue " << min_eig << " below -" << psd_tol;
    fail(ErrorCode::NotDensityMatrix, msg.str());
  }
  return DensityMatrix(shape, std::move(entries));
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  const Eigen::VectorXcd v = state.to_eigen();
  return DensityMatrix(state.shape(), v * v.adjoint());
}

RankTwoState RankTwoState::create(double p, PureState e1, PureState e2,
                                  double orth_tol) {
  if (!(e1.shape() == e2.shape())) {
    fail(ErrorCode::ShapeMismatch, "eigenvectors have different shapes");
  }
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "mixing weight p = " << p << " must lie strictly inside (0,1)";
    fail(ErrorCode::InvalidArgument, msg.str());
  }
  const double overlap = std::abs(inner_product(e1, e2));
  if (overlap > orth_tol) {
    std::ostringstream msg;
    msg << "eigenvectors overlap by " << overlap;
    fail(ErrorCode::InvalidArgument, msg.str());
  }
  return RankTwoState(p, std::move(e1), std::move(e2));
}

DensityMatrix RankTwoState::assemble() const {
  const Eigen::VectorXcd v1 = e1_.to_eigen();
  const Eigen::VectorXcd v2 = e2_.to_eigen();
  Eigen::MatrixXcd rho = p_ * (v1 * v1.adjoint()) + (1.0 - p_) * (v2 * v2.adjoint());
  return DensityMatrix::create(shape(), std::move(rho));
}

RankTwoState rank_two_extract(const DensityMatrix& rho, double tolerance) {
  const Eigen::MatrixXcd sym = (rho.matrix() + rho.matrix().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::Internal, "eigendecomposition did not converge");
  }
  const Eigen::VectorXd evals = solver.eigenvalues();
  const auto dim = evals.size();

  // Eigen returns ascending eigenvalues; the top two live at the end.
  const double lambda1 = evals(dim - 1);
  const double lambda2 = dim >= 2 ? evals(dim - 2) : 0.0;
  const double lambda3 = dim >= 3 ? evals(dim - 3) : 0.0;
  if (dim >= 3 && std::abs(lambda3) >= tolerance) {
    std::ostringstream msg;
    msg << "third-largest eigenvalue " << lambda3 << " exceeds " << tolerance;
    fail(ErrorCode::NotRankTwo, msg.str());
  }
  if (lambda2 < tolerance) {
    std::ostringstream msg;
    msg << "second eigenvalue " << lambda2 << " below " << tolerance
        << " (rank one)";
    fail(ErrorCode::NotRankTwo, msg.str());
  }

  std::vector<Complex> v1(static_cast<std::size_t>(dim));
  std::vector<Complex> v2(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) {
    v1[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, dim - 1);
    v2[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, dim - 2);
  }
  v1 = phase_fixed(std::move(v1));
  v2 = phase_fixed(std::move(v2));

  // Under a degenerate top pair the eigenvalues are numerically identical,
  // so only the vector order needs a deterministic rule.
  if (std::abs(lambda1 - lambda2) <= 1e-12 && lex_greater(v2, v1)) {
    std::swap(v1, v2);
  }

  const double p = lambda1 / (lambda1 + lambda2);
  PureState e1 = PureState::create_normalized(rho.shape(), std::move(v1));
  PureState e2 = PureState::create_normalized(rho.shape(), std::move(v2));
  RankTwoState state = RankTwoState::create(p, std::move(e1), std::move(e2));

  const double residual =
      (state.assemble().matrix() - rho.matrix()).cwiseAbs().maxCoeff();
  if (residual > tolerance) {
    std::ostringstream msg;
    msg << "rank-two reconstruction misses the input by " << residual;
    fail(ErrorCode::NotRankTwo, msg.str());
  }
  return state;
}

}  // namespace rank2sep
