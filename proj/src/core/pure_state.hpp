#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "core/shape.hpp"
#include "core/tolerances.hpp"

namespace rank2sep {

using Complex = std::complex<double>;

/// Normalized state vector on M parties of local dimension N, stored as a
/// dense amplitude array in flat MultiIndex order (party 0 slowest).
class PureState {
 public:
  /// Validates length, finiteness, and unit norm (within norm_tol).
  static PureState create(const PartyShape& shape,
                          std::vector<Complex> amplitudes,
                          double norm_tol = tol::norm);

  /// Rescales to unit norm first; rejects vectors with negligible norm.
  static PureState create_normalized(const PartyShape& shape,
                                     std::vector<Complex> amplitudes);

  /// Computational basis vector |i_1 i_2 ... i_M>.
  static PureState basis(const PartyShape& shape, const MultiIndex& idx);

  /// (1/sqrt(N)) sum_i e_i x e_i x ... x e_i.
  static PureState ghz(const PartyShape& shape);

  /// Tensor product of per-party vectors; each factor is normalized first.
  static PureState product(const PartyShape& shape,
                           const std::vector<std::vector<Complex>>& factors);

  const PartyShape& shape() const { return shape_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::size_t dim() const { return amps_.size(); }

  Complex amplitude(std::size_t flat) const { return amps_[flat]; }
  Complex amplitude(const MultiIndex& idx) const {
    return amps_[flat_index(shape_, idx)];
  }

  /// Largest |Im(a)| over all amplitudes.
  double max_imag() const;
  bool is_real(double tolerance) const { return max_imag() <= tolerance; }

  Eigen::VectorXcd to_eigen() const;

 private:
  PureState(PartyShape shape, std::vector<Complex> amps)
      : shape_(shape), amps_(std::move(amps)) {}

  PartyShape shape_;
  std::vector<Complex> amps_;
};

/// <a|b> with conjugation on the first argument.
Complex inner_product(const PureState& a, const PureState& b);

/// Reshapes the amplitude tensor into an N^|T| x N^|S| matrix; rows run over
/// the T positions, columns over the S positions (see CutIndexer).
Eigen::MatrixXcd matricize(const PureState& state, const Bipartition& cut);

/// One N x N unitary per party, acting factorwise on a PureState by ordinary
/// matrix action: amplitudes transform as a' = (U_1 x ... x U_M) a. Applying
/// U then V therefore equals applying the factorwise product VU.
class LocalUnitary {
 public:
  static LocalUnitary create(const PartyShape& shape,
                             std::vector<Eigen::MatrixXcd> factors,
                             double unitary_tol = tol::unitary);

  static LocalUnitary identity(const PartyShape& shape);

  const PartyShape& shape() const { return shape_; }
  const std::vector<Eigen::MatrixXcd>& factors() const { return factors_; }

  /// Factorwise product this * other.
  LocalUnitary compose(const LocalUnitary& other) const;

 private:
  LocalUnitary(PartyShape shape, std::vector<Eigen::MatrixXcd> factors)
      : shape_(shape), factors_(std::move(factors)) {}

  PartyShape shape_;
  std::vector<Eigen::MatrixXcd> factors_;
};

PureState apply_local_unitary(const PureState& state, const LocalUnitary& u);

/// Multiplies by the global phase that makes the first entry of magnitude
/// above cutoff real and positive. Vectors below cutoff everywhere are
/// returned unchanged.
std::vector<Complex> phase_fixed(std::vector<Complex> amps,
                                 double cutoff = 1e-12);

}  // namespace rank2sep
