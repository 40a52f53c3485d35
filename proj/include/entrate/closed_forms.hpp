#pragma once

// Analytic results used as independent oracles for the numerical pipeline,
// plus the comparison with two- and three-mode entanglement schemes.

#include <Eigen/Dense>

#include "entrate/gaussian_core.hpp"
#include "entrate/langevin_models.hpp"

namespace entrate {

/// Smaller eigenvalue of the output correlator matrix at omega = delta =
/// Delta = 0 as a function of cooperativity C = g^2/(kappa Gamma) and thermal
/// occupation. Evaluated in a cancellation-free form.
double eta_minus_resonant(double C, double n_th);

/// Same quantity evaluated literally as a difference of two large terms.
/// Loses roughly log10(C^2) digits; kept for cross-checks at moderate C.
double eta_minus_resonant_naive(double C, double n_th);

/// Photon-pair rate of the effective optical model (units of kappa).
/// Throws UnstableSystem on or beyond the stability boundary.
double pair_rate_closed(double g, double kappa, double delta, double Delta);

/// Scattering matrix of the effective optical model written out entrywise
/// in terms of the drift entries M11, M22 and M14.
Eigen::Matrix4cd effective_scattering_closed(const EffectiveModelParams& p, double omega);

/// Output correlators of the full model at resonant drive (Delta = 0).
/// The returned triple carries its exact Gram determinant.
CorrelatorTriple full_model_correlators_resonant(double g, double kappa, double Gamma,
                                                 double delta, double n_th, double omega);

/// Stokes/anti-Stokes sideband correlators of a single-cavity, single-
/// mechanical-mode setup driven on resonance (valid for Omega >> Gamma).
CorrelatorTriple two_mode_scheme_correlators(double g, double kappa, double Gamma,
                                             double Omega, double n_th);

struct EnhancementFactors {
  double vs_two_mode = 0.0;
  double vs_three_mode = 0.0;
};

/// Leading-order pair-rate enhancement: Omega^4/(delta^2 + kappa^2/4)^2 over
/// the two-mode scheme and (2 Omega/kappa)^4 over three-mode schemes.
EnhancementFactors enhancement_factors(double Omega, double kappa, double delta);

struct ComparisonResult {
  double our_coherent_intensity = 0.0;
  double two_mode_coherent_intensity = 0.0;
  double enhancement_vs_two_mode = 0.0;
  double enhancement_vs_three_mode = 0.0;
  double Omega = 0.0;
};

/// Compares the n_th-independent sideband intensities at omega = delta. Each
/// of our optical transitions couples with g/2, so the two-mode scheme is
/// evaluated at coupling g/2 to match the per-transition strength. Only the
/// leading-order factor is available for three-mode schemes.
ComparisonResult compare_schemes(double g, double kappa, double Gamma, double Omega,
                                 double delta);

}  // namespace entrate
