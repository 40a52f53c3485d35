#pragma once

// Frequency-domain solution of the Langevin equations.
//
// Fourier convention a(ω) = ∫ a(t) e^{iωt} dt. Output fields obey
// A_out(ω) = S(ω) A_in(ω) with S(ω) = I + D^{1/2} (m + iω)^{-1} D^{1/2}.
// Input noise is white: optical inputs are in vacuum, the mechanical bath has
// occupation n_th.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "entrate/gaussian_core.hpp"
#include "entrate/langevin_models.hpp"
#include "entrate/quadrature.hpp"

namespace entrate {

struct ScatteringMatrix {
  double omega = 0.0;
  Eigen::MatrixXcd s;
};

/// Throws SingularMatrix if m + iω is not invertible.
ScatteringMatrix scattering_matrix(const DriftMatrix& d, double omega);

/// max |S K S† - K| / max(1, |S|²) with K = diag(+1, -1, +1, -1, ...).
double flux_deviation(const ScatteringMatrix& s);

/// max |S(ω)[i',j'] - conj(S(-ω)[i,j])| where i' is the adjoint partner of i.
double reality_pairing_deviation(const DriftMatrix& d, double omega);

/// Input noise coefficients C[i][j] with <A_in,i(t) A_in,j(t')> = C[i][j] δ(t-t').
Eigen::MatrixXd input_noise_matrix(const DriftMatrix& d, double n_th);

/// W(ω) = S(ω) C S(-ω)ᵀ: spectral density of the output operator products.
Eigen::MatrixXcd output_noise_matrix(const DriftMatrix& d, double omega, double n_th);

/// Correlators read off W: n₊ - 1/2 = Re W(-ω)[a₊†, a₊], n₋ - 1/2 =
/// Re W(ω)[a₋†, a₋], ξ = W(ω)[a₊, a₋]. Reference route for cross-checks; it
/// does not provide an accurate Gram determinant.
CorrelatorTriple output_correlators_from_noise_matrix(const DriftMatrix& d, double omega,
                                                      double n_th);

struct SpectrumPoint {
  double omega = 0.0;
  double total = 0.0;
  double optical_part = 0.0;
  double mechanical_part = 0.0;
};

/// Per-drift evaluator with the stability check and channel bookkeeping done
/// once. Every query touches only the block of operators dynamically coupled
/// to a₊ and a₋†.
class SpectralEvaluator {
 public:
  /// Throws UnstableSystem if the drift has an eigenvalue with positive real
  /// part (beyond the stability tolerance).
  SpectralEvaluator(DriftMatrix d, double n_th);

  const DriftMatrix& drift() const { return drift_; }
  double n_th() const { return n_th_; }
  const Eigen::VectorXcd& eigenvalues() const { return eigenvalues_; }

  /// Output correlators at (ω, -ω), including a Gram determinant computed
  /// without cancellation.
  CorrelatorTriple correlators(double omega) const;

  /// 2x2 Hermitian matrix [[n₊, ξ], [ξ*, n₋]].
  Eigen::Matrix2cd correlator_matrix(double omega) const;

  /// Rows a₊ and a₋† of S(ω) restricted to the coupled block (2 x block size).
  Eigen::MatrixXcd transfer_rows(double omega) const;

  /// Symmetrized occupation of each input channel of the coupled block.
  const Eigen::VectorXd& block_occupations() const { return sym_occupation_; }

  /// Output intensity of beam 1 split by input channel.
  SpectrumPoint spectrum(double omega) const;

 private:
  struct BlockSolve {
    Eigen::MatrixXcd s;  // S restricted to the coupled block
    std::complex<double> det_s;
    Eigen::MatrixXcd s_inv;
    bool dual_ok = false;
  };
  BlockSolve solve_block(double omega) const;

  DriftMatrix drift_;
  double n_th_;
  Eigen::VectorXcd eigenvalues_;
  std::vector<int> block_;  // indices of the coupled block in the full ordering
  Eigen::MatrixXcd m_block_;
  Eigen::VectorXd sqrt_decay_;
  Eigen::VectorXd sym_occupation_;  // symmetrized input occupation per block channel
  Eigen::VectorXd normal_weight_;   // <x† x> of each block input channel
  std::vector<bool> mechanical_;
  int row_plus_ = -1;        // a₊ within the block
  int row_minus_dag_ = -1;   // a₋† within the block
};

CorrelatorTriple output_correlators(const DriftMatrix& d, double omega, double n_th);
SpectrumPoint output_spectrum(const DriftMatrix& d, double omega, double n_th);

/// Pair creation rate ∫ dω/2π (n₊(ω) - 1/2) of the effective model, in units
/// of kappa. Throws QuadratureError if the error estimate exceeds rel_tol of
/// the result.
double pair_rate_numeric(const EffectiveModelParams& p, double rel_tol = 1e-10);
/// Same integral of the beam-1 output intensity for any evaluator.
double pair_rate_numeric(const SpectralEvaluator& ev, double rel_tol = 1e-10);

}  // namespace entrate
