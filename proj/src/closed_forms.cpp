#include "entrate/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

#include "entrate/errors.hpp"

namespace entrate {
namespace {

void require_nonneg(double x, const char* name) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument(fmt::format("{} must be finite and non-negative", name));
  }
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument(fmt::format("{} must be finite and positive", name));
  }
}

}  // namespace

double eta_minus_resonant(double C, double n_th) {
  require_nonneg(C, "C");
  require_nonneg(n_th, "n_th");
  const double s = C + n_th + 0.5;
  // (a - b) = (a^2 - b^2)/(a + b) with a^2 - b^2 = 4C(n_th + 1/2) + 1/4.
  const double num = 4.0 * C * (n_th + 0.5) + 0.25;
  const double den = 4.0 * C * s + 0.5 + 2.0 * C * std::sqrt(1.0 + 4.0 * s * s);
  return num / den;
}

double eta_minus_resonant_naive(double C, double n_th) {
  require_nonneg(C, "C");
  require_nonneg(n_th, "n_th");
  const double s = C + n_th + 0.5;
  return 4.0 * C * s + 0.5 - 2.0 * C * std::sqrt(1.0 + 4.0 * s * s);
}

double pair_rate_closed(double g, double kappa, double delta, double Delta) {
  require_nonneg(g, "g");
  require_positive(kappa, "kappa");
  if (delta == 0.0) throw std::invalid_argument("pair rate needs delta != 0");
  const double gm = g * g / (4.0 * delta);
  const double half_k = 0.5 * kappa;
  const double den = half_k * half_k + (Delta + 2.0 * gm) * Delta;
  if (!(den > 0.0)) {
    const double max_re = -half_k + std::sqrt(std::max(0.0, -(Delta + 2.0 * gm) * Delta));
    throw UnstableSystem(
        fmt::format("pair rate diverges: Delta={} is on or beyond the stability boundary", Delta),
        max_re);
  }
  return gm * gm * half_k / den;
}

Eigen::Matrix4cd effective_scattering_closed(const EffectiveModelParams& p, double omega) {
  p.validate();
  const std::complex<double> i{0.0, 1.0};
  const double gm = p.mediated_coupling();
  const std::complex<double> m11 = i * (p.Delta + gm) - 0.5 * p.kappa;
  const std::complex<double> m22 = -i * (p.Delta + gm) - 0.5 * p.kappa;
  const std::complex<double> m14 = i * gm;
  const std::complex<double> a = m11 + i * omega;
  const std::complex<double> b = m22 + i * omega;
  const std::complex<double> pre = p.kappa / (m14 * m14 + a * b);
  Eigen::Matrix4cd core;
  core << b, 0.0, 0.0, -m14,
          0.0, a, m14, 0.0,
          0.0, -m14, b, 0.0,
          m14, 0.0, 0.0, a;
  return pre * core + Eigen::Matrix4cd::Identity();
}

CorrelatorTriple full_model_correlators_resonant(double g, double kappa, double Gamma,
                                                 double delta, double n_th, double omega) {
  require_nonneg(g, "g");
  require_positive(kappa, "kappa");
  require_positive(Gamma, "Gamma");
  require_nonneg(n_th, "n_th");
  const double detuning = delta - omega;
  const double mech = detuning * detuning + 0.25 * Gamma * Gamma;
  const double opt = omega * omega + 0.25 * kappa * kappa;
  const double g2 = 0.25 * g * g;
  const double x = kappa * g2 / (mech * opt);
  const double coherent = kappa * kappa * g2 * g2 / (mech * opt * opt);
  CorrelatorTriple t;
  t.n_plus = Gamma * x * n_th + coherent + 0.5;
  t.n_minus = Gamma * x * (n_th + 1.0) + coherent + 0.5;
  t.xi = {-coherent - Gamma * x * (n_th + 0.5), detuning * x};
  t.gram_det = 0.25 + Gamma * x * (n_th + 0.5);
  t.occupation_plus = Gamma * x * n_th + coherent;
  t.occupation_minus = Gamma * x * (n_th + 1.0) + coherent;
  return t;
}

CorrelatorTriple two_mode_scheme_correlators(double g, double kappa, double Gamma,
                                             double Omega, double n_th) {
  require_nonneg(g, "g");
  require_positive(kappa, "kappa");
  require_positive(Gamma, "Gamma");
  require_nonneg(n_th, "n_th");
  const double q = Omega * Omega + 0.25 * kappa * kappa;
  const double b = kappa * g * g / (q * 0.5 * Gamma);
  const double u = b * b;
  CorrelatorTriple t;
  t.n_plus = u + 2.0 * n_th * b + 0.5;
  t.n_minus = u + 2.0 * (n_th + 1.0) * b + 0.5;
  t.xi = {-u - (2.0 * n_th + 1.0) * b, 0.0};
  t.gram_det = 0.25 + (2.0 * n_th + 1.0) * b;
  t.occupation_plus = u + 2.0 * n_th * b;
  t.occupation_minus = u + 2.0 * (n_th + 1.0) * b;
  return t;
}

EnhancementFactors enhancement_factors(double Omega, double kappa, double delta) {
  require_positive(Omega, "Omega");
  require_positive(kappa, "kappa");
  const double d = delta * delta + 0.25 * kappa * kappa;
  EnhancementFactors f;
  f.vs_two_mode = std::pow(Omega, 4) / (d * d);
  f.vs_three_mode = std::pow(2.0 * Omega / kappa, 4);
  return f;
}

ComparisonResult compare_schemes(double g, double kappa, double Gamma, double Omega,
                                 double delta) {
  const auto ours = full_model_correlators_resonant(g, kappa, Gamma, delta, 0.0, delta);
  const auto theirs = two_mode_scheme_correlators(0.5 * g, kappa, Gamma, Omega, 0.0);
  ComparisonResult r;
  r.Omega = Omega;
  // The coherent part is the n_th = 0 occupation of beam 1.
  r.our_coherent_intensity = ours.n_plus - 0.5;
  r.two_mode_coherent_intensity = theirs.n_plus - 0.5;
  r.enhancement_vs_two_mode = r.our_coherent_intensity / r.two_mode_coherent_intensity;
  r.enhancement_vs_three_mode = enhancement_factors(Omega, kappa, delta).vs_three_mode;
  return r;
}

}  // namespace entrate
