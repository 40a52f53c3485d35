#include <doctest.h>

#include <cmath>
#include <random>

#include "entrate/closed_forms.hpp"
#include "entrate/errors.hpp"
#include "entrate/scattering_spectra.hpp"

#include "support.hpp"

using namespace entrate;

namespace {

FullModelParams fig4(double Delta, double delta, double n_th) {
  FullModelParams p;
  p.g = 5.0;
  p.Delta = Delta;
  p.delta = delta;
  p.n_th = n_th;
  return p;
}

}  // namespace

TEST_CASE("uncoupled effective model reflects every port") {
  const DriftMatrix d = drift_effective({0.0, 1.0, 0.3, 10.0});
  for (double w : {-5.0, 0.0, 0.4, 30.0}) {
    const Eigen::MatrixXcd s = scattering_matrix(d, w).s;
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(s(i, i)) == near(1.0, 1e-14));
      for (int j = 0; j < 4; ++j) {
        if (i != j) CHECK(std::abs(s(i, j)) == 0.0);
      }
    }
  }
}

TEST_CASE("scattering tends to the identity far from resonance") {
  const DriftMatrix d = drift_full(fig4(0.0, 10.0, 0.0));
  for (double w : {-1e6, 1e6}) {
    const Eigen::MatrixXcd s = scattering_matrix(d, w).s;
    CHECK((s - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-5);
  }
}

TEST_CASE("effective scattering matches the entrywise closed form") {
  const EffectiveModelParams e{5.0, 1.0, 0.0, 10.0};
  for (double w : {-3.0, -0.5, 0.0, 0.25, 7.0}) {
    const Eigen::MatrixXcd s = scattering_matrix(drift_effective(e), w).s;
    CHECK((s - Eigen::MatrixXcd(effective_scattering_closed(e, w))).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("flux and reality pairing at random stable points") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tested = 0;
  while (tested < 20) {
    FullModelParams p = fig4(-1.0 + 2.0 * u(rng), -15.0 + 30.0 * u(rng), 100.0 * u(rng));
    p.g = 6.0 * u(rng);
    const DriftMatrix d = drift_full(p);
    if (!stability(d).stable) continue;
    ++tested;
    for (int k = 0; k < 20; ++k) {
      const double w = -20.0 + 40.0 * u(rng);
      CHECK(flux_deviation(scattering_matrix(d, w)) < 1e-10);
      CHECK(reality_pairing_deviation(d, w) < 1e-10);
    }
  }
}

TEST_CASE("vacuum output without coupling") {
  FullModelParams p = fig4(0.0, 10.0, 50.0);
  p.g = 0.0;
  const CorrelatorTriple t = output_correlators(drift_full(p), 0.0, 50.0);
  CHECK(t.n_plus == 0.5);
  CHECK(t.n_minus == 0.5);
  CHECK(std::abs(t.xi) == 0.0);
  const SpectrumPoint s = output_spectrum(drift_full(p), 1.0, 50.0);
  CHECK(s.total == 0.0);
  CHECK(s.optical_part == 0.0);
  CHECK(s.mechanical_part == 0.0);
}

TEST_CASE("effective occupation equals the cross-scattering weight") {
  const DriftMatrix d = drift_effective({5.0, 1.0, -0.1, 10.0});
  for (double w : {-2.0, 0.0, 0.3, 1.5}) {
    const CorrelatorTriple t = output_correlators(d, w, 0.0);
    const double s14 = std::norm(scattering_matrix(d, w).s(0, 3));
    CHECK(t.n_plus == near(s14 + 0.5, 1e-12));
    CHECK(t.n_minus == near(t.n_plus, 1e-12));
  }
}

TEST_CASE("full model matches the resonant closed form") {
  for (double w : {-4.0, 0.0, 3.0, 10.0}) {
    for (double delta : {0.0, 10.0}) {
      const CorrelatorTriple a = output_correlators(drift_full(fig4(0.0, delta, 50.0)), w, 50.0);
      const CorrelatorTriple b = full_model_correlators_resonant(5.0, 1.0, 1e-3, delta, 50.0, w);
      CHECK(a.n_plus == near(b.n_plus, 1e-9));
      CHECK(a.n_minus == near(b.n_minus, 1e-9));
      CHECK(std::abs(a.xi - b.xi) <= 1e-9 * std::abs(b.xi));
    }
  }
}

TEST_CASE("noise-matrix route agrees with the evaluator") {
  const DriftMatrix d = drift_full(fig4(-0.1, 10.0, 20.0));
  for (double w : {-3.0, 0.5, 4.0}) {
    const CorrelatorTriple a = output_correlators(d, w, 20.0);
    const CorrelatorTriple b = output_correlators_from_noise_matrix(d, w, 20.0);
    CHECK(a.n_plus == near(b.n_plus, 1e-9));
    CHECK(a.n_minus == near(b.n_minus, 1e-9));
    CHECK(std::abs(a.xi - b.xi) <= 1e-9 * std::abs(b.xi));
  }
}

TEST_CASE("no intra-beam squeezing") {
  const DriftMatrix d = drift_full(fig4(-0.2, 10.0, 50.0));
  const int ap = d.index_of(Channel::APlus), am = d.index_of(Channel::AMinus);
  for (double w : {-10.0, 0.0, 2.0, 10.0}) {
    const Eigen::MatrixXcd W = output_noise_matrix(d, w, 50.0);
    CHECK(std::abs(W(ap, ap)) <= 1e-12 * std::max(1.0, W.cwiseAbs().maxCoeff()));
    CHECK(std::abs(W(am, am)) <= 1e-12 * std::max(1.0, W.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("spectrum splits into optical and mechanical inputs") {
  const SpectralEvaluator ev(drift_full(fig4(0.0, 10.0, 50.0)), 50.0);
  for (double w : {-12.0, -10.0, 0.0, 0.0125, 5.0, 10.0}) {
    const SpectrumPoint s = ev.spectrum(w);
    CHECK(s.total == near(s.optical_part + s.mechanical_part, 1e-12));
    CHECK(s.total == near(ev.correlators(w).n_plus - 0.5, 1e-9));
  }
}

TEST_CASE("two-peak output spectrum off mechanical resonance") {
  const SpectralEvaluator ev(drift_full(fig4(0.0, 10.0, 50.0)), 50.0);
  CHECK(ev.spectrum(10.0).total > 10 * ev.spectrum(9.0).total);
  CHECK(ev.spectrum(10.0).total > 10 * ev.spectrum(11.0).total);
  const SpectrumPoint low = ev.spectrum(0.0125);
  CHECK(low.optical_part > low.mechanical_part);
  CHECK(low.total > ev.spectrum(1.0).total);
}

TEST_CASE("merged peak on mechanical resonance is narrow") {
  const SpectralEvaluator ev(drift_full(fig4(0.0, 0.0, 0.0)), 0.0);
  const double peak = ev.spectrum(0.0).total;
  CHECK(peak > ev.spectrum(-0.1).total);
  CHECK(ev.spectrum(0.01).total < 0.5 * peak);
}

TEST_CASE("unstable parameters are rejected") {
  CHECK_THROWS_AS(SpectralEvaluator(drift_effective({5.0, 1.0, -0.5, 10.0}), 0.0), UnstableSystem);
}

TEST_CASE("effective and full models agree deep in the adiabatic regime") {
  for (double D : {-0.2, -0.1, 0.0, 0.1, 0.2}) {
    const double full = output_correlators(drift_full(fig4(D, 50.0, 0.0)), 0.0, 0.0).n_plus;
    const double eff = output_correlators(drift_effective({5.0, 1.0, D, 50.0}), 0.0, 0.0).n_plus;
    CHECK(std::abs(full - eff) <= 0.05 * eff);
  }
}

TEST_CASE("pair rate by quadrature") {
  CHECK(pair_rate_numeric({0.0, 1.0, 0.0, 10.0}) == doctest::Approx(0.0));
  CHECK(pair_rate_numeric({5.0, 1.0, 0.0, 10.0}) == near(0.78125, 1e-9));
  for (double D : {-0.24, -0.2, 0.3}) {
    CHECK(pair_rate_numeric({5.0, 1.0, D, 10.0}) ==
          near(pair_rate_closed(5.0, 1.0, 10.0, D), 1e-8));
  }
  CHECK(pair_rate_numeric({5.0, 1.0, -0.24, 10.0}) > 10 * pair_rate_numeric({5.0, 1.0, 0.0, 10.0}));
}
