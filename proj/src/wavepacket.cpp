#include "entrate/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <fmt/core.h>

#include "entrate/errors.hpp"
#include "entrate/quadrature.hpp"

namespace entrate {
namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> unit_phase(std::int64_t num, std::int64_t den) {
  const std::int64_t r = ((num % den) + den) % den;
  const double angle = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

void require_kernel_args(int M, int l) {
  if (M < 1) throw std::invalid_argument("coarse-graining factor M must be >= 1");
  if (l < 0 || l >= M) {
    throw std::invalid_argument(fmt::format("sub-band index l={} outside [0, {})", l, M));
  }
}

}  // namespace

double WannierGrid::delta_omega() const { return 2.0 * kPi / tau; }

void WannierGrid::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  require_kernel_args(M, l);
}

std::complex<double> wannier_kernel(int M, int l, std::int64_t k) {
  require_kernel_args(M, l);
  const double root = std::sqrt(static_cast<double>(M));
  if (k == 0) return 1.0 / root;
  if (k % M == 0) return 0.0;
  const std::complex<double> step = unit_phase(k, M) - 1.0;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const std::complex<double> denom{0.0, 2.0 * kPi * static_cast<double>(k)};
  return root * step / denom * sign * unit_phase(static_cast<std::int64_t>(l) * (k % M), M);
}

double kernel_norm(int M, int l, std::int64_t cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  // Smallest terms first.
  double sum = 0.0;
  for (std::int64_t k = cutoff; k >= 1; --k) {
    sum += std::norm(wannier_kernel(M, l, k)) + std::norm(wannier_kernel(M, l, -k));
  }
  return sum + std::norm(wannier_kernel(M, l, 0));
}

double kernel_tail_bound(int M, std::int64_t cutoff) {
  require_kernel_args(M, 0);
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  if (M == 1) return 0.0;
  // |K(k)|² = M sin²(πk/M)/(π²k²); split sin² = (1 - cos(2πk/M))/2 and bound
  // the oscillating part by Abel summation.
  const double n = static_cast<double>(cutoff);
  const double m = static_cast<double>(M);
  return m / (kPi * kPi * n) + m / (kPi * kPi * (n + 1.0) * (n + 1.0) * std::sin(kPi / m));
}

std::complex<double> coarse_grain_invariance(std::complex<double> c, int M, int l,
                                             std::int64_t cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  std::complex<double> sum = 0.0;
  for (std::int64_t k = cutoff; k >= 1; --k) {
    for (std::int64_t kk : {k, -k}) {
      const auto beam1 = wannier_kernel(M, l, kk);
      const auto beam2 = std::conj(wannier_kernel(M, l, kk));
      sum += beam1 * beam2 * c;
    }
  }
  const auto k0 = wannier_kernel(M, l, 0);
  return sum + k0 * std::conj(k0) * c;
}

CorrelatorTriple coarse_grained_triple(const CorrelatorTriple& t, int M, int l,
                                       std::int64_t cutoff) {
  CorrelatorTriple out;
  out.n_plus = coarse_grain_invariance(t.n_plus - 0.5, M, l, cutoff).real() + 0.5;
  out.n_minus = coarse_grain_invariance(t.n_minus - 0.5, M, l, cutoff).real() + 0.5;
  out.xi = coarse_grain_invariance(t.xi, M, l, cutoff);
  return out;
}

DiscreteWannierBasis::DiscreteWannierBasis(int slots, int samples_per_slot)
    : slots_(slots), samples_per_slot_(samples_per_slot) {
  if (slots < 2 || slots % 2 != 0) {
    throw std::invalid_argument("number of slots must be even and >= 2");
  }
  if (samples_per_slot < 1) throw std::invalid_argument("samples per slot must be >= 1");
}

Eigen::VectorXcd DiscreteWannierBasis::from_bins(int first_bin, int count, double amplitude,
                                                 int shift_samples) const {
  // Unitary inverse DFT of amplitude·e^{2πi q s/N} over bins q in
  // [first_bin, first_bin + count).
  const int n = samples();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  const double norm = amplitude / std::sqrt(static_cast<double>(n));
  for (int q = first_bin; q < first_bin + count; ++q) {
    for (int t = 0; t < n; ++t) {
      out(t) += norm * unit_phase(static_cast<std::int64_t>(q) * (shift_samples - t), n);
    }
  }
  return out;
}

Eigen::VectorXcd DiscreteWannierBasis::packet(int m, int n) const {
  const int first = m * slots_ - slots_ / 2;
  return from_bins(first, slots_, 1.0 / std::sqrt(static_cast<double>(slots_)),
                   n * samples_per_slot_);
}

Eigen::VectorXcd DiscreteWannierBasis::coarse_packet(int m, int M, int l, int n) const {
  require_kernel_args(M, l);
  if (slots_ % M != 0) {
    throw std::invalid_argument(fmt::format("M={} does not divide {} slots", M, slots_));
  }
  const int width = slots_ / M;
  const int first = m * slots_ - slots_ / 2 + l * width;
  return from_bins(first, width, 1.0 / std::sqrt(static_cast<double>(width)),
                   n * M * samples_per_slot_);
}

std::complex<double> DiscreteWannierBasis::discrete_kernel(int M, int l,
                                                           std::int64_t k) const {
  require_kernel_args(M, l);
  const double root = std::sqrt(static_cast<double>(M));
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const auto lead = root / slots_ * sign * unit_phase(static_cast<std::int64_t>(l) * k, M);
  const auto den = unit_phase(k, slots_) - 1.0;
  if (std::abs(den) == 0.0) {
    return lead * static_cast<double>(slots_ / M);
  }
  return lead * (unit_phase(k, M) - 1.0) / den;
}

double lorentzian_density(const FilterSpec& f, double omega) {
  const double w = 1.0 / f.tau;
  const double x = omega - f.omega_center;
  return w / (kPi * (x * x + w * w));
}

double filtered_entanglement(const DriftMatrix& d, double n_th, const FilterSpec& beam1,
                             const FilterSpec& beam2) {
  return filtered_entanglement(SpectralEvaluator(d, n_th), beam1, beam2);
}

double filtered_entanglement(const SpectralEvaluator& ev, const FilterSpec& beam1,
                             const FilterSpec& beam2) {
  if (!(beam1.tau > 0.0) || !(beam2.tau > 0.0)) {
    throw std::invalid_argument("filter times must be positive");
  }
  if (beam1.tau != beam2.tau) throw std::invalid_argument("both filters must share tau");
  const double centre = beam1.omega_center;
  if (std::abs(centre + beam2.omega_center) > 1e-12 * std::max(1.0, std::abs(centre))) {
    throw std::invalid_argument("beam 2 filter must be centred at minus the beam 1 centre");
  }

  // Work in the eigenbasis of the correlator matrix at the filter centre: the
  // nearly vanishing squeezed component is then integrated on its own instead
  // of emerging from a difference of large filtered entries.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(ev.correlator_matrix(centre));
  const Eigen::Matrix2cd basis = es.eigenvectors();
  const Eigen::VectorXd& occ = ev.block_occupations();
  auto rotated = [&](double w) {
    const Eigen::MatrixXcd p = basis.adjoint() * ev.transfer_rows(w);
    return Eigen::Matrix2cd(p * occ.asDiagonal() * p.adjoint());
  };

  std::vector<double> bp = resonance_breakpoints(ev.eigenvalues());
  const double width = 1.0 / beam1.tau;
  for (double k : {0.0, 1.0, 10.0, 100.0, 1e3, 1e4}) {
    bp.push_back(centre - k * width);
    bp.push_back(centre + k * width);
  }
  constexpr double kRelTol = 1e-12;
  auto average = [&](auto component) {
    return integrate_real_line(
               [&](double w) { return lorentzian_density(beam1, w) * component(rotated(w)); },
               bp, QuadratureOptions{.rel_tol = kRelTol})
        .value;
  };
  const double h11 = average([](const Eigen::Matrix2cd& h) { return h(0, 0).real(); });
  const double h22 = average([](const Eigen::Matrix2cd& h) { return h(1, 1).real(); });
  const double re12 = average([](const Eigen::Matrix2cd& h) { return h(0, 1).real(); });
  const double im12 = average([](const Eigen::Matrix2cd& h) { return h(0, 1).imag(); });

  CorrelatorTriple rotated_triple;
  rotated_triple.n_plus = h11;
  rotated_triple.n_minus = h22;
  rotated_triple.xi = {re12, im12};
  const double two_eta = 2.0 * eta_minus(rotated_triple);
  if (!(two_eta > 0.0) || !std::isfinite(two_eta)) {
    throw UnphysicalState(fmt::format("filtered state has 2*eta_minus = {}", two_eta));
  }
  return std::max(0.0, -std::log(two_eta));
}

}  // namespace entrate
