#include "entrate/entanglement_rate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <fmt/core.h>

#include "entrate/errors.hpp"
#include "entrate/gaussian_core.hpp"
#include "entrate/quadrature.hpp"

namespace entrate {
namespace {

constexpr int kSamplesPerSegment = 16;

// Frequencies at which E is probed before integration: every resonance
// breakpoint, a uniform subdivision of each segment, and geometric steps out
// into both tails.
std::vector<double> probe_grid(const std::vector<double>& bp) {
  std::vector<double> grid;
  const double lo = bp.front();
  const double hi = bp.back();
  const double span = std::max({1.0, std::abs(lo), std::abs(hi)});
  for (int k = 4; k >= -4; --k) grid.push_back(lo - span * std::ldexp(1.0, k));
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    for (int j = 0; j < kSamplesPerSegment; ++j) {
      grid.push_back(bp[i] + (bp[i + 1] - bp[i]) * j / kSamplesPerSegment);
    }
  }
  grid.push_back(hi);
  for (int k = -4; k <= 4; ++k) grid.push_back(hi + span * std::ldexp(1.0, k));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

double spectral_density(const SpectralEvaluator& ev, double omega) {
  return log_negativity_two_mode(ev.correlators(omega));
}

double spectral_density(const DriftMatrix& d, double omega, double n_th) {
  return spectral_density(SpectralEvaluator(d, n_th), omega);
}

double symmetrized_density(const DriftMatrix& d, double omega, double n_th) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("symmetrized density is defined for omega > 0");
  }
  const SpectralEvaluator ev(d, n_th);
  return spectral_density(ev, omega) + spectral_density(ev, -omega);
}

EntanglementSpectrum sample_entanglement_spectrum(const SpectralEvaluator& ev,
                                                  const std::vector<double>& omegas) {
  EntanglementSpectrum s;
  std::vector<double> sorted = omegas;
  std::sort(sorted.begin(), sorted.end());
  s.samples.reserve(sorted.size());
  for (double w : sorted) s.samples.emplace_back(w, spectral_density(ev, w));
  return s;
}

RateResult entanglement_rate(const DriftMatrix& d, double n_th, double tol) {
  return entanglement_rate(SpectralEvaluator(d, n_th), tol);
}

RateResult entanglement_rate(const SpectralEvaluator& ev, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  auto density = [&](double w) { return spectral_density(ev, w); };
  // Positive exactly where the two output modes are entangled.
  auto margin = [&](double w) { return separability_margin(ev.correlators(w)); };

  std::vector<double> bp = resonance_breakpoints(ev.eigenvalues());
  const std::vector<double> grid = probe_grid(bp);

  EntanglementSpectrum probe;
  std::vector<double> margins;
  for (double w : grid) {
    margins.push_back(margin(w));
    probe.samples.emplace_back(w, density(w));
  }

  // Support edges become breakpoints so no quadrature panel straddles a kink.
  boost::math::tools::eps_tolerance<double> edge_tol(50);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if ((margins[i] > 0.0) != (margins[i + 1] > 0.0)) {
      const auto bracket = boost::math::tools::bisect(margin, grid[i], grid[i + 1], edge_tol);
      bp.push_back(0.5 * (bracket.first + bracket.second));
    }
  }

  // Near narrow resonances E carries rounding noise well above 1e-12
  // relative, so the target is absolute: a fraction of the requested
  // tolerance on the rate itself.
  const QuadratureOptions opt{.rel_tol = 1e-12, .abs_tol = 0.1 * tol * 2.0 * std::numbers::pi};
  const auto q = integrate_real_line(density, bp, opt);

  RateResult r;
  r.gamma_E = q.value / (2.0 * std::numbers::pi);
  r.quadrature_error = q.error / (2.0 * std::numbers::pi);
  if (r.quadrature_error > tol) {
    throw QuadratureError(fmt::format("entanglement rate quadrature error {:.3g} exceeds {:.3g}",
                                      r.quadrature_error, tol),
                          r.quadrature_error);
  }

  const auto best = std::max_element(
      probe.samples.begin(), probe.samples.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  if (best->second <= 0.0) return r;

  const std::size_t k = static_cast<std::size_t>(best - probe.samples.begin());
  const double left = probe.samples[k == 0 ? 0 : k - 1].first;
  const double right = probe.samples[std::min(k + 1, probe.samples.size() - 1)].first;
  r.omega_max = best->first;
  r.E_max = best->second;
  if (left < right) {
    const auto refined = boost::math::tools::brent_find_minima(
        [&](double w) { return -density(w); }, left, right, 40);
    if (-refined.second > r.E_max) {
      r.omega_max = refined.first;
      r.E_max = -refined.second;
    }
  }
  r.fwhm = fwhm(density, r.omega_max, std::min(1e-6, tol));
  r.secondary_peaks = count_secondary_peaks(probe);
  return r;
}

double fwhm(const EntanglementSpectrum& spectrum) {
  const auto& s = spectrum.samples;
  if (s.empty()) throw std::invalid_argument("empty spectrum");
  const auto best = std::max_element(s.begin(), s.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  if (best->second <= 0.0) throw std::invalid_argument("spectrum has no peak");
  const double half = 0.5 * best->second;
  const std::size_t k = static_cast<std::size_t>(best - s.begin());

  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const auto& [w0, e0] = s[inside];
    const auto& [w1, e1] = s[outside];
    return w0 + (w1 - w0) * (e0 - half) / (e0 - e1);
  };

  std::size_t i = k;
  while (i > 0 && s[i - 1].second >= half) --i;
  if (i == 0) throw std::invalid_argument("peak does not fall to half height on the left");
  std::size_t j = k;
  while (j + 1 < s.size() && s[j + 1].second >= half) ++j;
  if (j + 1 == s.size()) {
    throw std::invalid_argument("peak does not fall to half height on the right");
  }
  return crossing(j, j + 1) - crossing(i, i - 1);
}

double fwhm(const std::function<double(double)>& f, double omega_peak, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double peak = f(omega_peak);
  if (!(peak > 0.0)) throw std::invalid_argument("function has no peak at the given point");
  const double half = 0.5 * peak;

  auto flank = [&](double direction) {
    double inner = 0.0;
    double outer = tol;
    int doublings = 0;
    while (f(omega_peak + direction * outer) >= half) {
      inner = outer;
      outer *= 2.0;
      if (++doublings > 200) {
        throw std::runtime_error("peak does not fall to half height");
      }
    }
    while (outer - inner > tol) {
      const double mid = 0.5 * (inner + outer);
      if (f(omega_peak + direction * mid) >= half) {
        inner = mid;
      } else {
        outer = mid;
      }
    }
    return 0.5 * (inner + outer);
  };
  return flank(-1.0) + flank(+1.0);
}

int count_secondary_peaks(const EntanglementSpectrum& spectrum, double min_fraction) {
  const auto& s = spectrum.samples;
  if (s.size() < 3) return 0;
  double top = 0.0;
  for (const auto& p : s) top = std::max(top, p.second);
  if (top <= 0.0) return 0;
  // A local maximum counts when it rises at least min_fraction·top above the
  // deepest dip separating it from any higher sample on each side, so rounding
  // ripples on a flat top are ignored and the global maximum never counts.
  const double needed = min_fraction * top;
  int peaks = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double e = s[i].second;
    if (!(e > s[i - 1].second && e >= s[i + 1].second)) continue;
    double left_floor = e;
    bool left_higher = false;
    for (std::size_t j = i; j-- > 0;) {
      if (s[j].second > e) { left_higher = true; break; }
      left_floor = std::min(left_floor, s[j].second);
    }
    double right_floor = e;
    bool right_higher = false;
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j].second > e) { right_higher = true; break; }
      right_floor = std::min(right_floor, s[j].second);
    }
    if (!left_higher && !right_higher) continue;
    // Only sides that lead to a higher sample bound the prominence.
    double base = -1.0;
    if (left_higher) base = std::max(base, left_floor);
    if (right_higher) base = std::max(base, right_floor);
    if (e - base >= needed) ++peaks;
  }
  return peaks;
}

double nats_per_second(double gamma_E, double kappa_per_second) {
  return gamma_E * kappa_per_second;
}

}  // namespace entrate
