#pragma once

// Spectral density of entanglement E[ω] between the ω component of beam 1 and
// the -ω component of beam 2, and its integral, the entanglement rate
// Γ_E = ∫ dω/2π E[ω], reported in units of kappa (nats per 1/kappa).

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "entrate/langevin_models.hpp"
#include "entrate/scattering_spectra.hpp"

namespace entrate {

double spectral_density(const DriftMatrix& d, double omega, double n_th);
double spectral_density(const SpectralEvaluator& ev, double omega);

/// E[ω] + E[-ω] for ω > 0.
double symmetrized_density(const DriftMatrix& d, double omega, double n_th);

using ModelParams = std::variant<std::monostate, FullModelParams, EffectiveModelParams>;

struct EntanglementSpectrum {
  std::vector<std::pair<double, double>> samples;  // (ω, E), ascending in ω
  ModelParams params;
  double quadrature_error = 0.0;
};

EntanglementSpectrum sample_entanglement_spectrum(const SpectralEvaluator& ev,
                                                  const std::vector<double>& omegas);

struct RateResult {
  double gamma_E = 0.0;
  double E_max = 0.0;
  double omega_max = 0.0;
  double fwhm = 0.0;
  int secondary_peaks = 0;
  double quadrature_error = 0.0;
};

/// Γ_E by adaptive quadrature to absolute tolerance `tol` (units of kappa),
/// with peak height, position and full width at half maximum of the highest
/// peak. Throws UnstableSystem or QuadratureError.
RateResult entanglement_rate(const DriftMatrix& d, double n_th, double tol = 1e-6);
RateResult entanglement_rate(const SpectralEvaluator& ev, double tol = 1e-6);

/// Width at half height of the highest sampled peak, by linear interpolation
/// between samples. Throws if the spectrum is identically zero or the peak
/// does not drop to half height inside the sampled range.
double fwhm(const EntanglementSpectrum& spectrum);

/// Width at half height of the peak of `f` at `omega_peak`, found by
/// bisection on both flanks to absolute tolerance `tol`.
double fwhm(const std::function<double(double)>& f, double omega_peak, double tol = 1e-6);

/// Number of local maxima, other than the highest, whose prominence (height
/// above the dip separating them from a higher sample) is at least
/// `min_fraction` of the global maximum.
int count_secondary_peaks(const EntanglementSpectrum& spectrum, double min_fraction = 1e-2);

/// Converts a rate in units of kappa to nats per second for kappa given in s⁻¹.
double nats_per_second(double gamma_E, double kappa_per_second);

}  // namespace entrate
