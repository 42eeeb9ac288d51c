#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "core/pure_state.hpp"
#include "core/shape.hpp"

// Independent re-derivations of the library's quantities, written from the
// definitions with no shared code paths, frozen as test oracles.
namespace testref {

using rank2sep::Bipartition;
using rank2sep::Complex;
using rank2sep::CutIndexer;
using rank2sep::PartyShape;
using rank2sep::PureState;

/// Biquadratic invariant from its four-index definition
/// sum_{t,t',s,s'} a_{t,s} conj(a_{t',s}) a_{t',s'} conj(a_{t,s'}).
inline double biquadratic(const PureState& state, const Bipartition& cut) {
  const CutIndexer indexer(state.shape(), cut);
  const std::size_t rows = indexer.rows();
  const std::size_t cols = indexer.cols();
  Complex acc = 0.0;
  for (std::size_t t = 0; t < rows; ++t) {
    for (std::size_t tp = 0; tp < rows; ++tp) {
      for (std::size_t s = 0; s < cols; ++s) {
        for (std::size_t sp = 0; sp < cols; ++sp) {
          acc += state.amplitude(indexer.merge(t, s)) *
                 std::conj(state.amplitude(indexer.merge(tp, s))) *
                 state.amplitude(indexer.merge(tp, sp)) *
                 std::conj(state.amplitude(indexer.merge(t, sp)));
        }
      }
    }
  }
  return acc.real();
}

/// Two-qubit concurrence closed form 2|a00*a11 - a01*a10|.
inline double two_qubit_concurrence(const PureState& state) {
  const auto& a = state.amplitudes();
  return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
}

/// Concurrence evaluated through the invariant difference
/// sqrt(N/(d(N-1)) * (d*i0^2 - sum of biquadratics)), the form that cancels
/// catastrophically near zero; accurate to ~1e-7 and useful as a cross-check
/// on the minor-expansion route.
inline double concurrence_by_invariants(const PureState& state) {
  const PartyShape& shape = state.shape();
  const auto cuts = rank2sep::canonical_bipartitions(shape);
  const double d = static_cast<double>(cuts.size());
  const double n = static_cast<double>(shape.local_dim);
  double i0 = 0.0;
  for (const Complex& z : state.amplitudes()) i0 += std::norm(z);
  double sum = 0.0;
  for (const auto& cut : cuts) sum += biquadratic(state, cut);
  const double radicand = n / (d * (n - 1.0)) * (d * i0 * i0 - sum);
  return std::sqrt(std::max(0.0, radicand));
}

struct BruteEntry {
  Complex alpha;
  Complex beta;
  Complex gamma;
};

/// Quadratic coefficients for one bipartition and one unordered index pair,
/// straight from the matricizations: the quadratic is the 2x2 minor of
/// mat(E1) + lambda*mat(E2) at rows {t, tp} and columns {s, sp}.
inline BruteEntry brute_coefficients(const Eigen::MatrixXcd& a,
                                     const Eigen::MatrixXcd& b, std::size_t t,
                                     std::size_t tp, std::size_t s,
                                     std::size_t sp) {
  const auto ti = static_cast<Eigen::Index>(t);
  const auto tpi = static_cast<Eigen::Index>(tp);
  const auto si = static_cast<Eigen::Index>(s);
  const auto spi = static_cast<Eigen::Index>(sp);
  BruteEntry e;
  e.gamma = a(ti, si) * a(tpi, spi) - a(ti, spi) * a(tpi, si);
  e.alpha = b(ti, si) * b(tpi, spi) - b(ti, spi) * b(tpi, si);
  e.beta = a(ti, si) * b(tpi, spi) + b(ti, si) * a(tpi, spi) -
           a(ti, spi) * b(tpi, si) - b(ti, spi) * a(tpi, si);
  return e;
}

}  // namespace testref
