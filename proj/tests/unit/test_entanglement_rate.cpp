#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <tuple>

#include "entrate/closed_forms.hpp"
#include "entrate/entanglement_rate.hpp"
#include "entrate/quadrature.hpp"

#include "support.hpp"

using namespace entrate;

namespace {

FullModelParams point(double C, double Gamma, double Delta, double delta, double n_th) {
  FullModelParams p;
  p.Gamma = Gamma;
  p.g = std::sqrt(C * Gamma);
  p.Delta = Delta;
  p.delta = delta;
  p.n_th = n_th;
  return p;
}

}  // namespace

TEST_CASE("no coupling, no entanglement") {
  FullModelParams p = point(0.0, 1e-3, 0.0, 10.0, 50.0);
  CHECK(spectral_density(drift_full(p), 0.3, 50.0) == 0.0);
  CHECK(symmetrized_density(drift_full(p), 0.3, 50.0) == 0.0);
  CHECK(entanglement_rate(drift_full(p), 50.0).gamma_E == 0.0);
}

TEST_CASE("resonant spectral density") {
  const double C = 2.5e4;
  CHECK(spectral_density(drift_full(point(C, 1e-3, 0, 0, 0)), 0.0, 0.0) ==
        near(10.82, 1e-3));
  CHECK(spectral_density(drift_full(point(C, 1e-3, 0, 0, 50)), 0.0, 50.0) ==
        near(6.21, 1e-3));
  for (double n : {0.0, 50.0, 500.0}) {
    CHECK(spectral_density(drift_full(point(C, 1e-3, 0, 0, n)), 0.0, n) ==
          near(-std::log(2 * eta_minus_resonant(C, n)), 1e-9));
  }
}

TEST_CASE("symmetrized density") {
  const DriftMatrix d = drift_full(point(2.5e4, 1e-3, 0, 0, 0));
  for (double w : {0.01, 0.3, 1.0}) {
    CHECK(symmetrized_density(d, w, 0.0) == near(2 * spectral_density(d, w, 0.0), 1e-10));
  }
  CHECK_THROWS(symmetrized_density(d, 0.0, 0.0));
  CHECK_THROWS(symmetrized_density(d, -1.0, 0.0));

  // half-line integral of the symmetrized density equals the full-line rate
  const DriftMatrix off = drift_full(point(2.5e4, 1e-3, -0.1, 10.0, 50.0));
  const RateResult r = entanglement_rate(off, 50.0, 1e-7);
  const SpectralEvaluator ev(off, 50.0);
  std::vector<double> bp = resonance_breakpoints(ev.eigenvalues());
  for (double& x : bp) x = std::abs(x);
  const auto f = [&](double w) { return w > 0 ? symmetrized_density(off, w, 50.0) : 0.0; };
  const double half = integrate_real_line(f, bp, {.rel_tol = 1e-12, .abs_tol = 1e-9}).value / (2 * M_PI);
  CHECK(half == near(r.gamma_E, 1e-6));
}

TEST_CASE("rate at the resonant operating point") {
  const RateResult r = entanglement_rate(drift_full(point(2.5e4, 1e-3, 0, 0, 0)), 0.0);
  CHECK(r.gamma_E == near(3.8192886, 1e-6));
  CHECK(r.E_max == near(10.82, 1e-3));
  CHECK(std::abs(r.omega_max) < 1e-3);
  CHECK(r.fwhm > 100 * 1e-3);
  CHECK(r.secondary_peaks == 0);
}

TEST_CASE("halving the tolerance stays within the reported error") {
  const DriftMatrix d = drift_full(point(2.5e4, 1e-3, -0.1, 10.0, 50.0));
  const RateResult a = entanglement_rate(d, 50.0, 1e-6);
  const RateResult b = entanglement_rate(d, 50.0, 5e-7);
  CHECK(std::abs(a.gamma_E - b.gamma_E) <= std::max(a.quadrature_error, 1e-15));
  CHECK(a.quadrature_error <= 1e-6);
}

TEST_CASE("temperature lowers the rate") {
  double previous = INFINITY;
  for (double n : {0.0, 50.0, 500.0}) {
    const double r = entanglement_rate(drift_full(point(2.5e4, 1e-3, 0, 0, n)), n).gamma_E;
    CHECK(r < previous);
    previous = r;
  }
}

TEST_CASE("near the optical instability: tall but narrow") {
  const RateResult edge = entanglement_rate(drift_full(point(2.5e4, 1e-3, -0.24, 10.0, 0)), 0.0);
  const RateResult centre = entanglement_rate(drift_full(point(2.5e4, 1e-3, 0, 0, 0)), 0.0);
  CHECK(edge.E_max > 5.0);
  CHECK(edge.gamma_E < centre.gamma_E);
}

TEST_CASE("density is non-negative and decays far from resonance") {
  for (auto [Delta, delta, n] : {std::tuple{0.0, 10.0, 50.0}, {-0.2, 10.0, 0.0}, {0.0, 0.0, 0.0}}) {
    const SpectralEvaluator ev(drift_full(point(2.5e4, 1e-3, Delta, delta, n)), n);
    for (double w = -30.0; w <= 30.0; w += 0.37) CHECK(spectral_density(ev, w) >= 0.0);
    CHECK(spectral_density(ev, 1e3) < 1e-6);
    CHECK(spectral_density(ev, -1e3) < 1e-6);
  }
}

TEST_CASE("width of a triangular peak") {
  const double w = 0.8;
  EntanglementSpectrum s;
  for (int i = -100; i <= 100; ++i) {
    const double x = 0.01 * i;
    s.samples.emplace_back(x, std::max(0.0, 1.0 - std::abs(x) / w));
  }
  CHECK(fwhm(s) == near(w, 1e-12));
  const auto tri = [&](double x) { return std::max(0.0, 1.0 - std::abs(x) / w); };
  CHECK(fwhm(tri, 0.0) == near(w, 1e-5));
  EntanglementSpectrum zero;
  zero.samples = {{-1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
  CHECK_THROWS(fwhm(zero));
}

TEST_CASE("secondary peaks need prominence") {
  EntanglementSpectrum s;
  for (int i = 0; i <= 400; ++i) {
    const double x = -10.0 + 0.05 * i;
    s.samples.emplace_back(x, std::exp(-x * x) + 0.2 * std::exp(-(x - 5) * (x - 5)) +
                                  1e-4 * std::cos(40 * x));
  }
  CHECK(count_secondary_peaks(s) == 1);
}

TEST_CASE("width varies smoothly with damping at fixed cooperativity") {
  std::vector<double> widths;
  for (double G : {1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2}) {
    widths.push_back(entanglement_rate(drift_full(point(2.5e4, G, 0, 0, 50)), 50.0).fwhm);
  }
  for (std::size_t i = 1; i < widths.size(); ++i) {
    CHECK(widths[i] > widths[i - 1]);
    CHECK(widths[i] < 2 * widths[i - 1]);
  }
}

TEST_CASE("unit conversion") {
  CHECK(nats_per_second(2.0, 1e6) == doctest::Approx(2e6));
}
