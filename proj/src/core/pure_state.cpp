#include "core/pure_state.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace rank2sep {

namespace {

double norm_sq(const std::vector<Complex>& amps) {
  double acc = 0.0;
  for (const Complex& a : amps) acc += std::norm(a);
  return acc;
}

void check_finite(const std::vector<Complex>& amps) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (!std::isfinite(amps[i].real()) || !std::isfinite(amps[i].imag())) {
      std::ostringstream msg;
      msg << "amplitude " << i << " is not finite";
      fail(ErrorCode::InvalidArgument, msg.str());
    }
  }
}

}  // namespace

PureState PureState::create(const PartyShape& shape,
                            std::vector<Complex> amplitudes,
                            double norm_tol) {
  if (amplitudes.size() != shape.total_dim()) {
    std::ostringstream msg;
    msg << "expected " << shape.total_dim() << " amplitudes, got "
        << amplitudes.size();
    fail(ErrorCode::ShapeMismatch, msg.str());
  }
  check_finite(amplitudes);
  const double n = std::sqrt(norm_sq(amplitudes));
  if (std::abs(n - 1.0) > norm_tol) {
    std::ostringstream msg;
    msg << "state norm " << n << " deviates from 1 by more than " << norm_tol;
    fail(ErrorCode::Unnormalized, msg.str());
  }
  return PureState(shape, std::move(amplitudes));
}

PureState PureState::create_normalized(const PartyShape& shape,
                                       std::vector<Complex> amplitudes) {
  if (amplitudes.size() != shape.total_dim()) {
    fail(ErrorCode::ShapeMismatch, "amplitude count does not match shape");
  }
  check_finite(amplitudes);
  const double n = std::sqrt(norm_sq(amplitudes));
  if (n < 1e-12) {
    fail(ErrorCode::InvalidArgument, "cannot normalize a near-zero vector");
  }
  for (Complex& a : amplitudes) a /= n;
  return PureState(shape, std::move(amplitudes));
}

PureState PureState::basis(const PartyShape& shape, const MultiIndex& idx) {
  std::vector<Complex> amps(shape.total_dim(), Complex(0.0, 0.0));
  amps[flat_index(shape, idx)] = Complex(1.0, 0.0);
  return PureState(shape, std::move(amps));
}

PureState PureState::ghz(const PartyShape& shape) {
  std::vector<Complex> amps(shape.total_dim(), Complex(0.0, 0.0));
  const double w = 1.0 / std::sqrt(static_cast<double>(shape.local_dim));
  // Flat index of (i,i,...,i) is i * (N^M - 1) / (N - 1).
  const std::size_t stride =
      (shape.total_dim() - 1) / static_cast<std::size_t>(shape.local_dim - 1);
  for (int i = 0; i < shape.local_dim; ++i) {
    amps[static_cast<std::size_t>(i) * stride] = Complex(w, 0.0);
  }
  return PureState(shape, std::move(amps));
}

PureState PureState::product(const PartyShape& shape,
                             const std::vector<std::vector<Complex>>& factors) {
  if (static_cast<int>(factors.size()) != shape.num_parties) {
    fail(ErrorCode::ShapeMismatch, "need one factor per party");
  }
  std::vector<std::vector<Complex>> unit(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (static_cast<int>(factors[k].size()) != shape.local_dim) {
      fail(ErrorCode::ShapeMismatch, "factor dimension does not match shape");
    }
    double n = 0.0;
    for (const Complex& c : factors[k]) n += std::norm(c);
    n = std::sqrt(n);
    if (n < 1e-12) {
      fail(ErrorCode::InvalidArgument, "product factor has negligible norm");
    }
    unit[k].resize(factors[k].size());
    for (std::size_t i = 0; i < factors[k].size(); ++i) {
      unit[k][i] = factors[k][i] / n;
    }
  }
  std::vector<Complex> amps(shape.total_dim());
  for (std::size_t flat = 0; flat < amps.size(); ++flat) {
    const MultiIndex idx = unflatten(shape, flat);
    Complex prod(1.0, 0.0);
    for (std::size_t k = 0; k < unit.size(); ++k) {
      prod *= unit[k][static_cast<std::size_t>(idx[k])];
    }
    amps[flat] = prod;
  }
  return PureState(shape, std::move(amps));
}

double PureState::max_imag() const {
  double m = 0.0;
  for (const Complex& a : amps_) m = std::max(m, std::abs(a.imag()));
  return m;
}

Eigen::VectorXcd PureState::to_eigen() const {
  return Eigen::Map<const Eigen::VectorXcd>(amps_.data(),
                                            static_cast<Eigen::Index>(amps_.size()));
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (!(a.shape() == b.shape())) {
    fail(ErrorCode::ShapeMismatch, "inner product requires matching shapes");
  }
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return acc;
}

Eigen::MatrixXcd matricize(const PureState& state, const Bipartition& cut) {
  if (cut.num_parties() != state.shape().num_parties) {
    fail(ErrorCode::ShapeMismatch, "bipartition does not match state shape");
  }
  const CutIndexer indexer(state.shape(), cut);
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(indexer.rows()),
                       static_cast<Eigen::Index>(indexer.cols()));
  for (std::size_t r = 0; r < indexer.rows(); ++r) {
    for (std::size_t c = 0; c < indexer.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          state.amplitude(indexer.merge(r, c));
    }
  }
  return out;
}

LocalUnitary LocalUnitary::create(const PartyShape& shape,
                                  std::vector<Eigen::MatrixXcd> factors,
                                  double unitary_tol) {
  if (static_cast<int>(factors.size()) != shape.num_parties) {
    fail(ErrorCode::ShapeMismatch, "need one unitary factor per party");
  }
  const int n = shape.local_dim;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Eigen::MatrixXcd& u = factors[k];
    if (u.rows() != n || u.cols() != n) {
      fail(ErrorCode::ShapeMismatch, "unitary factor dimension mismatch");
    }
    const double dev =
        (u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (dev > unitary_tol) {
      std::ostringstream msg;
      msg << "factor " << k << " fails U U^dag = I by " << dev;
      fail(ErrorCode::InvalidArgument, msg.str());
    }
  }
  return LocalUnitary(shape, std::move(factors));
}

LocalUnitary LocalUnitary::identity(const PartyShape& shape) {
  std::vector<Eigen::MatrixXcd> factors(
      static_cast<std::size_t>(shape.num_parties),
      Eigen::MatrixXcd::Identity(shape.local_dim, shape.local_dim));
  return LocalUnitary(shape, std::move(factors));
}

LocalUnitary LocalUnitary::compose(const LocalUnitary& other) const {
  if (!(shape_ == other.shape_)) {
    fail(ErrorCode::ShapeMismatch, "cannot compose unitaries of different shapes");
  }
  std::vector<Eigen::MatrixXcd> factors(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    factors[k] = factors_[k] * other.factors_[k];
  }
  return LocalUnitary(shape_, std::move(factors));
}

PureState apply_local_unitary(const PureState& state, const LocalUnitary& u) {
  if (!(state.shape() == u.shape())) {
    fail(ErrorCode::ShapeMismatch, "unitary does not match state shape");
  }
  const PartyShape& shape = state.shape();
  const int n = shape.local_dim;
  std::vector<Complex> amps = state.amplitudes();
  std::vector<Complex> next(amps.size());
  // Contract one party at a time: for party k with stride s, each slice of n
  // entries spaced s apart is multiplied by the factor matrix.
  std::size_t stride = shape.total_dim();
  for (int k = 0; k < shape.num_parties; ++k) {
    stride /= static_cast<std::size_t>(n);
    const Eigen::MatrixXcd& f = u.factors()[static_cast<std::size_t>(k)];
    const std::size_t block = stride * static_cast<std::size_t>(n);
    for (std::size_t base = 0; base < amps.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (int j = 0; j < n; ++j) {
          Complex acc(0.0, 0.0);
          for (int i = 0; i < n; ++i) {
            acc += f(j, i) * amps[base + static_cast<std::size_t>(i) * stride + off];
          }
          next[base + static_cast<std::size_t>(j) * stride + off] = acc;
        }
      }
    }
    amps.swap(next);
  }
  return PureState::create(shape, std::move(amps));
}

std::vector<Complex> phase_fixed(std::vector<Complex> amps, double cutoff) {
  for (const Complex& a : amps) {
    const double mag = std::abs(a);
    if (mag > cutoff) {
      const Complex phase = std::conj(a) / mag;
      for (Complex& b : amps) b *= phase;
      break;
    }
  }
  return amps;
}

}  // namespace rank2sep
