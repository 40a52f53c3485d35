#pragma once

// Linear Langevin models. All rates are in units of the optical decay rate
// kappa; kappa is carried along so results can be converted to physical units.
//
// Operators are stacked as (a+, a+†, a-, a-†, b, b†) for the full model and
// (a+, a+†, a-, a-†) for the effective optical model. The equations of motion
// read dA/dt = m A - D^{1/2} A_in with D = diag(decay).

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace entrate {

enum class Channel { APlus, APlusDag, AMinus, AMinusDag, B, BDag };

const char* channel_name(Channel c);

struct FullModelParams {
  double g = 0.0;
  double kappa = 1.0;
  double Gamma = 1e-3;
  double Delta = 0.0;
  double delta = 0.0;
  double n_th = 0.0;

  double cooperativity() const { return g * g / (kappa * Gamma); }
  void validate() const;
};

struct EffectiveModelParams {
  double g = 0.0;
  double kappa = 1.0;
  double Delta = 0.0;
  double delta = 1.0;

  /// g^2 / 4 delta, the optical coupling mediated by the eliminated mechanics.
  double mediated_coupling() const { return g * g / (4.0 * delta); }
  void validate() const;
};

/// True when |Delta| and kappa, g are all at least `margin` times smaller than
/// |delta|, the regime where eliminating the mechanics is justified.
bool within_adiabatic_regime(const EffectiveModelParams& p, double margin = 10.0);

struct DriftMatrix {
  Eigen::MatrixXcd m;
  Eigen::VectorXd decay;
  std::vector<Channel> ordering;
  double kappa = 1.0;

  int dim() const { return static_cast<int>(m.rows()); }
  /// Position of a channel in the ordering, or -1.
  int index_of(Channel c) const;
};

DriftMatrix drift_full(const FullModelParams& p);
DriftMatrix drift_effective(const EffectiveModelParams& p);

/// max |conj(P m P) - m| where P swaps each operator with its adjoint partner.
double doubled_structure_deviation(const DriftMatrix& d);

struct StabilityReport {
  bool stable = false;
  bool marginal = false;
  double max_real_part = 0.0;
};

/// Stable iff every eigenvalue of m has real part below 1e-9 kappa; points
/// within that tolerance of zero are flagged marginal.
StabilityReport stability(const DriftMatrix& d);

/// Eigenvalues of m.
Eigen::VectorXcd drift_eigenvalues(const DriftMatrix& d);

/// Detunings where the effective model becomes unstable: the real roots of
/// Delta^2 + (g^2/2 delta) Delta + kappa^2/4 = 0, ascending. Empty when there
/// is no real root.
std::vector<double> stability_boundary_effective(double g, double kappa, double delta);

/// Closed-form largest real part of the effective-model eigenvalues.
double max_real_part_effective(const EffectiveModelParams& p);

/// Three coupled optomechanical cells: hopping rates K1, K2, bare coupling g0
/// and intracavity amplitude alpha.
struct CellParams {
  double K1 = 0.0;
  double K2 = 0.0;
  double g0 = 0.0;
  std::complex<double> alpha{0.0, 0.0};
};

struct CellMapping {
  FullModelParams params;
  double J = 0.0;       // optical normal-mode splitting
  double g0_eff = 0.0;  // single-photon coupling between the normal modes
};

CellMapping map_cell_params(const CellParams& c, double kappa, double Gamma,
                            double Omega, double n_th, double Delta = 0.0);

}  // namespace entrate
