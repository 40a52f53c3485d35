#pragma once

// Wave-packet view of the output beams: the sinc (Wannier) basis on a
// time-frequency grid, its coarse-graining kernel, and Lorentzian-filtered
// entanglement, which tends to E[ω] as the filter time grows.

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "entrate/gaussian_core.hpp"
#include "entrate/scattering_spectra.hpp"

namespace entrate {

struct WannierGrid {
  double tau = 1.0;  // time slot
  int M = 1;         // coarse-graining factor
  int l = 0;         // sub-band index in [0, M)

  double delta_omega() const;
  void validate() const;
};

/// Overlap between a coarse-grained packet (factor M, sub-band l) and the
/// original packet k slots away.
std::complex<double> wannier_kernel(int M, int l, std::int64_t k);

/// Σ_{|k| ≤ cutoff} |K(k)|².
double kernel_norm(int M, int l, std::int64_t cutoff);

/// Rigorous upper bound on Σ_{|k| > cutoff} |K(k)|².
double kernel_tail_bound(int M, std::int64_t cutoff);

/// Correlator of coarse-grained modes for uncorrelated slots that all carry
/// the same correlator c: Σ_{|k| ≤ cutoff} K(k)·conj(K(k))·c, with K acting on
/// beam 1 and K* on beam 2.
std::complex<double> coarse_grain_invariance(std::complex<double> c, int M, int l,
                                             std::int64_t cutoff);

/// Triple whose normally ordered parts (n - 1/2 and ξ) are coarse-grained.
CorrelatorTriple coarse_grained_triple(const CorrelatorTriple& t, int M, int l,
                                       std::int64_t cutoff);

/// Sinc packets on a periodic grid of `slots` time slots sampled at
/// `samples_per_slot` points each, built in the discrete Fourier domain and
/// evaluated in the time domain.
class DiscreteWannierBasis {
 public:
  DiscreteWannierBasis(int slots, int samples_per_slot = 16);

  int slots() const { return slots_; }
  int samples() const { return slots_ * samples_per_slot_; }
  int bands() const { return samples_per_slot_; }

  /// Packet of band m (centred on m·δω) at slot n, as time samples.
  Eigen::VectorXcd packet(int m, int n) const;

  /// Coarse-grained packet: factor M (dividing `slots`), sub-band l of band
  /// m, at coarse slot n.
  Eigen::VectorXcd coarse_packet(int m, int M, int l, int n) const;

  /// Closed-form overlap of the coarse packet (m, M, l, n') with the
  /// original packet (m, n' M + k) on this finite periodic grid.
  std::complex<double> discrete_kernel(int M, int l, std::int64_t k) const;

 private:
  Eigen::VectorXcd from_bins(int first_bin, int count, double amplitude,
                             int shift_samples) const;

  int slots_;
  int samples_per_slot_;
};

struct FilterSpec {
  double omega_center = 0.0;
  double tau = 1.0;  // inverse bandwidth
};

/// Normalized Lorentzian filter density (1/τ)/(π((ω - ω_c)² + 1/τ²)).
double lorentzian_density(const FilterSpec& f, double omega);

/// Entanglement between the outputs of two Lorentzian filters of equal τ,
/// beam 1 centred at ω and beam 2 at -ω, evaluated at equal times in the
/// stationary state.
double filtered_entanglement(const SpectralEvaluator& ev, const FilterSpec& beam1,
                             const FilterSpec& beam2);
double filtered_entanglement(const DriftMatrix& d, double n_th, const FilterSpec& beam1,
                             const FilterSpec& beam2);

}  // namespace entrate
