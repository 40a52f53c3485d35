#include <doctest.h>

#include <cmath>

#include "entrate/entanglement_rate.hpp"
#include "entrate/wavepacket.hpp"

#include "support.hpp"

using namespace entrate;

namespace {

FullModelParams resonant(double C, double Gamma) {
  FullModelParams p;
  p.Gamma = Gamma;
  p.g = std::sqrt(C * Gamma);
  return p;
}

}  // namespace

TEST_CASE("identity coarse-graining") {
  CHECK(std::abs(wannier_kernel(1, 0, 0) - 1.0) < 1e-15);
  for (int k : {-3, -1, 1, 2, 7}) CHECK(std::abs(wannier_kernel(1, 0, k)) < 1e-15);
  CHECK(kernel_tail_bound(1, 10) == 0.0);
}

TEST_CASE("kernel for pairs of slots") {
  CHECK(std::abs(wannier_kernel(2, 0, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  for (int k : {-4, 2, 6}) CHECK(std::abs(wannier_kernel(2, 0, k)) < 1e-15);
  for (int k : {-5, -1, 1, 3, 9}) {
    CHECK(std::norm(wannier_kernel(2, 0, k)) == near(2.0 / (M_PI * M_PI * k * k), 1e-13));
  }
}

TEST_CASE("invalid kernel arguments") {
  CHECK_THROWS(wannier_kernel(0, 0, 1));
  CHECK_THROWS(wannier_kernel(4, 4, 1));
  CHECK_THROWS(wannier_kernel(4, -1, 1));
}

TEST_CASE("kernel normalization within the tail bound") {
  const std::int64_t cutoff = 100000;
  for (int M : {2, 3, 8, 64}) {
    const double bound = kernel_tail_bound(M, cutoff);
    CHECK(bound < 1e-3);
    for (int l = 0; l < M; l += std::max(1, M / 4)) {
      const double tail = 1.0 - kernel_norm(M, l, cutoff);
      CAPTURE(M);
      CAPTURE(l);
      CHECK(tail >= 0.0);
      CHECK(tail < 1e-4);
      CHECK(tail <= bound);
    }
  }
}

TEST_CASE("coarse-graining preserves slot correlators") {
  CHECK(coarse_grain_invariance(0.0, 4, 1, 100000) == std::complex<double>(0.0, 0.0));
  const std::complex<double> c(1.0, 2.0);
  const std::complex<double> out = coarse_grain_invariance(c, 4, 1, 100000);
  CHECK(std::abs(out - c) < 1e-4 * std::abs(c));
  CHECK(std::abs(out / c - std::complex<double>(kernel_norm(4, 1, 100000), 0.0)) < 1e-12);
}

TEST_CASE("coarse-graining preserves the entanglement of slot pairs") {
  const double r = 0.8;
  const CorrelatorTriple t = triple(std::cosh(2 * r) / 2 + 0.3, std::cosh(2 * r) / 2 + 0.3, std::sinh(2 * r) / 2);
  for (int M : {2, 8}) {
    const CorrelatorTriple cg = coarse_grained_triple(t, M, 1, 100000);
    const double e = log_negativity_two_mode(t);
    CHECK(std::abs(log_negativity_two_mode(cg) - e) < 10 * kernel_tail_bound(M, 100000));
  }
}

TEST_CASE("discrete sinc packets are orthonormal") {
  const DiscreteWannierBasis basis(8, 16);
  double worst = 0.0;
  for (int m1 = 0; m1 < 2; ++m1) {
    for (int n1 = 0; n1 < 8; ++n1) {
      const Eigen::VectorXcd a = basis.packet(m1, n1);
      for (int m2 = 0; m2 < 2; ++m2) {
        for (int n2 = 0; n2 < 8; ++n2) {
          const double expected = (m1 == m2 && n1 == n2) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(a.dot(basis.packet(m2, n2)) - expected));
        }
      }
    }
  }
  CHECK(worst < 1e-8);

  worst = 0.0;
  for (int l1 = 0; l1 < 4; ++l1) {
    for (int l2 = 0; l2 < 4; ++l2) {
      for (int n = 0; n < 2; ++n) {
        const double expected = (l1 == l2 && n == 0) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(basis.coarse_packet(0, 4, l1, 0).dot(basis.coarse_packet(0, 4, l2, n)) - expected));
      }
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("discrete overlaps match the closed-form kernel") {
  const DiscreteWannierBasis basis(16, 16);
  const int M = 4;
  for (int l = 0; l < M; ++l) {
    const Eigen::VectorXcd coarse = basis.coarse_packet(1, M, l, 1);
    for (int k = -6; k <= 6; ++k) {
      const int slot = ((M + k) % 16 + 16) % 16;
      const std::complex<double> overlap = coarse.dot(basis.packet(1, slot));
      CHECK(std::abs(overlap - basis.discrete_kernel(M, l, k)) < 1e-8);
    }
  }
  // the periodic kernel approaches the infinite-line one as 1/slots
  for (int slots : {1024, 4096}) {
    const DiscreteWannierBasis wide(slots, 1);
    for (int k : {0, 1, 2, 5, -3}) {
      CHECK(std::abs(wide.discrete_kernel(M, 2, k) - wannier_kernel(M, 2, k)) <= 2.5 / slots);
    }
  }
}

TEST_CASE("Lorentzian filter density is normalized") {
  const FilterSpec f{0.7, 5.0};
  CHECK(lorentzian_density(f, 0.7) == doctest::Approx(5.0 / M_PI));
  double sum = 0.0;
  const double h = 1e-3;
  for (double w = -2000.0; w < 2000.0; w += h) sum += lorentzian_density(f, w + h / 2) * h;
  CHECK(sum == near(1.0, 1e-3));
}

TEST_CASE("filters see nothing without coupling") {
  const DriftMatrix d = drift_full(resonant(0.0, 1e-3));
  for (double tau : {1.0, 100.0}) {
    CHECK(filtered_entanglement(d, 0.0, {0.0, tau}, {0.0, tau}) <= 1e-14);
  }
}

TEST_CASE("filtered entanglement moves towards the spectral density") {
  const DriftMatrix d = drift_full(resonant(1e3, 1e-3));
  const double target = spectral_density(d, 0.0, 0.0);
  double previous = INFINITY;
  for (double tau : {10.0, 100.0, 1e3, 1e4}) {
    const double dev = std::abs(filtered_entanglement(d, 0.0, {0.0, tau}, {0.0, tau}) - target);
    CHECK(dev < previous);
    previous = dev;
  }
}

TEST_CASE("filtered entanglement within five percent at tau kappa = 1e3") {
  const DriftMatrix d = drift_full(resonant(1e3, 1e-3));
  const double target = spectral_density(d, 0.0, 0.0);
  const double filtered = filtered_entanglement(d, 0.0, {0.0, 1e3}, {0.0, 1e3});
  CHECK(std::abs(filtered - target) < 0.05 * target);
}

TEST_CASE("filtered entanglement converges as one over tau") {
  const DriftMatrix d = drift_full(resonant(1e3, 5e-2));
  const double target = spectral_density(d, 0.0, 0.0);
  std::vector<double> x, y;
  for (double tau : {1e7, 1e8, 1e9}) {
    const double dev = std::abs(filtered_entanglement(d, 0.0, {0.0, tau}, {0.0, tau}) - target);
    x.push_back(std::log(tau));
    y.push_back(std::log(dev));
  }
  const double slope = (y[2] - y[0]) / (x[2] - x[0]);
  CHECK(std::abs(slope + 1.0) <= 0.3);
}
