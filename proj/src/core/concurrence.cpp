#include "core/concurrence.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

#include "core/errors.hpp"

namespace rank2sep {

InvariantSet invariants(const PureState& state) {
  InvariantSet out;
  for (const Complex& a : state.amplitudes()) out.i0 += std::norm(a);
  for (const Bipartition& cut : canonical_bipartitions(state.shape())) {
    const Eigen::MatrixXcd a = matricize(state, cut);
    out.biquadratics.push_back((a * a.adjoint()).squaredNorm());
  }
  return out;
}

double biquadratic_naive(const PureState& state, const Bipartition& cut) {
  if (state.shape().total_dim() > 81) {
    fail(ErrorCode::InvalidArgument,
         "four-index biquadratic oracle is limited to dimension 81");
  }
  const Eigen::MatrixXcd a = matricize(state, cut);
  Complex acc(0.0, 0.0);
  for (Eigen::Index t = 0; t < a.rows(); ++t) {
    for (Eigen::Index tp = 0; tp < a.rows(); ++tp) {
      for (Eigen::Index s = 0; s < a.cols(); ++s) {
        for (Eigen::Index sp = 0; sp < a.cols(); ++sp) {
          acc += a(t, s) * std::conj(a(t, sp)) * a(tp, sp) * std::conj(a(tp, s));
        }
      }
    }
  }
  return acc.real();
}

double concurrence(const PureState& state) {
  const PartyShape& shape = state.shape();
  double minor_sq = 0.0;
  for (const Bipartition& cut : canonical_bipartitions(shape)) {
    const Eigen::MatrixXcd a = matricize(state, cut);
    for (Eigen::Index t = 0; t + 1 < a.rows(); ++t) {
      for (Eigen::Index tp = t + 1; tp < a.rows(); ++tp) {
        for (Eigen::Index s = 0; s + 1 < a.cols(); ++s) {
          for (Eigen::Index sp = s + 1; sp < a.cols(); ++sp) {
            minor_sq += std::norm(a(t, s) * a(tp, sp) - a(t, sp) * a(tp, s));
          }
        }
      }
    }
  }
  const double d = static_cast<double>((std::size_t{1} << (shape.num_parties - 1)) - 1);
  const double n = static_cast<double>(shape.local_dim);
  const double radicand = n / (d * (n - 1.0)) * 2.0 * minor_sq;
  return std::sqrt(radicand);
}

bool is_pure_separable(const PureState& state, double tolerance) {
  return concurrence(state) < tolerance;
}

ProductFactorization factorize(const PureState& state, double tolerance) {
  const PartyShape& shape = state.shape();
  std::size_t anchor = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const double mag = std::abs(state.amplitude(i));
    if (mag > best) {
      best = mag;
      anchor = i;
    }
  }
  const MultiIndex anchor_idx = unflatten(shape, anchor);

  ProductFactorization out;
  out.factors.resize(static_cast<std::size_t>(shape.num_parties));
  for (int k = 0; k < shape.num_parties; ++k) {
    std::vector<Complex> fiber(static_cast<std::size_t>(shape.local_dim));
    MultiIndex idx = anchor_idx;
    double norm_sq = 0.0;
    for (int i = 0; i < shape.local_dim; ++i) {
      idx[static_cast<std::size_t>(k)] = i;
      fiber[static_cast<std::size_t>(i)] = state.amplitude(idx);
      norm_sq += std::norm(fiber[static_cast<std::size_t>(i)]);
    }
    const double norm = std::sqrt(norm_sq);
    for (Complex& c : fiber) c /= norm;
    out.factors[static_cast<std::size_t>(k)] = phase_fixed(std::move(fiber));
  }

  const PureState product = PureState::product(shape, out.factors);
  const Complex ratio = state.amplitude(anchor) / product.amplitude(anchor);
  out.global_phase = ratio / std::abs(ratio);

  double residual = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    residual = std::max(residual, std::abs(state.amplitude(i) -
                                           out.global_phase * product.amplitude(i)));
  }
  if (residual > tolerance) {
    std::ostringstream msg;
    msg << "product reconstruction misses the state by " << residual;
    fail(ErrorCode::NotSeparable, msg.str());
  }
  return out;
}

}  // namespace rank2sep
