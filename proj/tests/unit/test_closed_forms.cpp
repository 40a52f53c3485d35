#include <doctest.h>

#include <cmath>

#include "entrate/closed_forms.hpp"
#include "entrate/errors.hpp"

#include "support.hpp"

using namespace entrate;

TEST_CASE("resonant eta limits and reference values") {
  CHECK(eta_minus_resonant(1e-12, 0.0) == near(0.5, 1e-9));
  CHECK(eta_minus_resonant(2.5e4, 0.0) == near(9.9998e-6, 1e-4));
  CHECK(eta_minus_resonant(2.5e4, 50.0) == near(1.008e-3, 1e-3));
  // Series cross-check η₋ ≈ ½ - C/(2(C + n_th + ½)) for large C.
  const double C = 1e6, n = 10.0;
  CHECK(eta_minus_resonant(C, n) == near(0.5 - C / (2 * (C + n + 0.5)), 1e-5));
}

TEST_CASE("cancellation-free and literal forms agree at moderate cooperativity") {
  for (double C : {0.1, 1.0, 10.0}) {
    for (double n : {0.0, 5.0}) {
      CHECK(eta_minus_resonant(C, n) ==
            near(eta_minus_resonant_naive(C, n), 1e-9));
    }
  }
}

TEST_CASE("resonant correlators reduce to the resonant eta") {
  const double Gamma = 1e-3;
  for (double C : {1.0, 1e3, 2.5e4}) {
    for (double n : {0.0, 50.0, 500.0}) {
      const CorrelatorTriple t =
          full_model_correlators_resonant(std::sqrt(C * Gamma), 1.0, Gamma, 0.0, n, 0.0);
      CHECK(t.n_plus == near(4 * C * n + 4 * C * C + 0.5, 1e-12));
      CHECK(t.n_minus == near(4 * C * (n + 1) + 4 * C * C + 0.5, 1e-12));
      CHECK(t.xi.real() == near(-4 * C * (C + n + 0.5), 1e-12));
      CHECK(eta_minus(t) == near(eta_minus_resonant(C, n), 1e-12));
    }
  }
}

TEST_CASE("closed forms reduce to vacuum without coupling") {
  const CorrelatorTriple a = full_model_correlators_resonant(0.0, 1.0, 1e-3, 10.0, 50.0, 3.0);
  CHECK(a.n_plus == 0.5);
  CHECK(a.n_minus == 0.5);
  CHECK(std::abs(a.xi) == 0.0);
  const CorrelatorTriple b = two_mode_scheme_correlators(0.0, 1.0, 1e-3, 100.0, 50.0);
  CHECK(b.n_plus == 0.5);
  CHECK(b.n_minus == 0.5);
  CHECK(std::abs(b.xi) == 0.0);
  CHECK(pair_rate_closed(0.0, 1.0, 10.0, 0.0) == 0.0);
}

TEST_CASE("pair rate closed form") {
  CHECK(pair_rate_closed(5.0, 1.0, 10.0, 0.0) == near(0.78125, 1e-14));
  CHECK(pair_rate_closed(5.0, 1.0, 10.0, -0.2) == near(0.625 * 0.625 * 0.5 / 0.04, 1e-12));
  CHECK(pair_rate_closed(5.0, 1.0, 10.0, -0.2) == near(4.8828, 1e-4));
  const double r1 = pair_rate_closed(5.0, 1.0, 10.0, -0.1);
  const double r2 = pair_rate_closed(5.0, 1.0, 10.0, -0.2);
  const double r3 = pair_rate_closed(5.0, 1.0, 10.0, -0.24);
  CHECK(r1 < r2);
  CHECK(r2 < r3);
  CHECK_THROWS_AS(pair_rate_closed(5.0, 1.0, 10.0, -0.25), UnstableSystem);
  CHECK_THROWS_AS(pair_rate_closed(5.0, 1.0, 10.0, -0.5), UnstableSystem);
}

TEST_CASE("effective scattering closed form is identity without coupling") {
  const Eigen::Matrix4cd s = effective_scattering_closed({0.0, 1.0, 0.3, 10.0}, 0.7);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(s(i, i)) == near(1.0, 1e-14));
}

TEST_CASE("two-mode scheme spontaneous-emission asymmetry") {
  const double g = 5.0, kappa = 1.0, Gamma = 1e-3, Omega = 100.0;
  const CorrelatorTriple t = two_mode_scheme_correlators(g, kappa, Gamma, Omega, 0.0);
  const double expected = 2 * kappa * g * g / ((Omega * Omega + 0.25) * (Gamma / 2));
  CHECK(t.n_minus - t.n_plus == near(expected, 1e-10));
}

TEST_CASE("enhancement factors") {
  const EnhancementFactors at_zero = enhancement_factors(100.0, 1.0, 0.0);
  CHECK(at_zero.vs_two_mode == near(1.6e9, 1e-12));
  CHECK(at_zero.vs_three_mode == near(1.6e9, 1e-12));
  const EnhancementFactors off = enhancement_factors(100.0, 1.0, 10.0);
  CHECK(off.vs_two_mode == near(1e8 / (100.25 * 100.25), 1e-12));
  CHECK(off.vs_three_mode == near(1.6e9, 1e-12));
}

TEST_CASE("coherent sideband comparison at matched per-transition coupling") {
  const ComparisonResult r = compare_schemes(5.0, 1.0, 1e-3, 100.0, 10.0);
  CHECK(r.our_coherent_intensity / r.two_mode_coherent_intensity ==
        near(1e8 / (100.25 * 100.25), 1e-3));
  CHECK(r.enhancement_vs_three_mode == near(1.6e9, 1e-12));
}
