#include "entrate/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "entrate/closed_forms.hpp"
#include "entrate/entanglement_rate.hpp"
#include "entrate/gaussian_core.hpp"
#include "entrate/scattering_spectra.hpp"
#include "entrate/wavepacket.hpp"

namespace entrate {
namespace {

// Tolerances, pinned.
constexpr double kResonantTol = 1e-9;
constexpr double kScatteringTol = 1e-12;
constexpr double kPairRateTol = 1e-6;
constexpr double kBoundaryTol = 1e-3;
constexpr double kOracleTol = 1e-9;
constexpr double kFluxTol = 1e-10;
constexpr double kIntraBeamTol = 1e-12;
constexpr double kSymplecticTol = 1e-9;
constexpr double kKernelTailLimit = 1e-4;
constexpr double kFilterFinalTol = 1e-2;
constexpr double kPeakSeparationTol = 0.01;  // relative to delta
constexpr double kSlopeTol = 0.1;
constexpr double kPathTol = 1e-10;

constexpr double kGamma = 1e-3;
constexpr double kRateTol = 1e-6;
constexpr unsigned kSeed = 20240611u;

FullModelParams full_params(double g, double Delta, double delta, double n_th,
                            double Gamma = kGamma) {
  FullModelParams p;
  p.g = g;
  p.Gamma = Gamma;
  p.Delta = Delta;
  p.delta = delta;
  p.n_th = n_th;
  return p;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

double rel_dev(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

using Check = CheckResult (*)(const VerifyOptions&);

CheckResult make_result(std::string id, std::string title) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

CheckResult check_resonant(const VerifyOptions& opt) {
  CheckResult r = make_result("1", "resonant closed form for E at omega = 0");
  r.tolerance = kResonantTol;
  std::string at;
  for (double C : {1.0, 1e3, 2.5e4}) {
    for (double n : {0.0, 50.0, 500.0}) {
      const FullModelParams p = full_params(std::sqrt(C * kGamma), 0.0, 0.0, n);
      const double numeric = spectral_density(SpectralEvaluator(opt.full_drift(p), n), 0.0);
      const double closed = -std::log(2.0 * eta_minus_resonant(C, n));
      const double dev = rel_dev(numeric, closed);
      if (dev >= r.measured) {
        r.measured = dev;
        at = fmt::format("C={:g} n_th={:g}: {:.12g} vs {:.12g}", C, n, numeric, closed);
      }
    }
  }
  r.passed = r.measured <= r.tolerance;
  r.detail = "worst at " + at;
  return r;
}

CheckResult check_scattering(const VerifyOptions&) {
  CheckResult r = make_result("2", "effective-model scattering matrix against closed form");
  r.tolerance = kScatteringTol;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int points = 0;
  while (points < 50) {
    EffectiveModelParams p;
    p.g = 6.0 * u(rng);
    p.delta = (u(rng) < 0.5 ? -1.0 : 1.0) * (2.0 + 18.0 * u(rng));
    p.Delta = -2.0 + 4.0 * u(rng);
    const double omega = -15.0 + 30.0 * u(rng);
    const DriftMatrix d = drift_effective(p);
    if (!stability(d).stable) continue;
    const Eigen::MatrixXcd diff = scattering_matrix(d, omega).s - effective_scattering_closed(p, omega);
    r.measured = std::max(r.measured, diff.cwiseAbs().maxCoeff());
    ++points;
  }
  r.passed = r.measured <= r.tolerance;
  r.detail = fmt::format("max entrywise deviation over {} stable points", points);
  return r;
}

CheckResult check_pair_rate(const VerifyOptions&) {
  CheckResult r = make_result("3", "pair rate quadrature against closed form");
  r.tolerance = kPairRateTol;
  struct Case {
    double g, delta, Delta;
  };
  for (const Case& c : {Case{5, 10, 0}, Case{5, 10, -0.24}, Case{3, -8, 0.5}, Case{2, 15, 1.0}}) {
    EffectiveModelParams p;
    p.g = c.g;
    p.delta = c.delta;
    p.Delta = c.Delta;
    const double numeric = pair_rate_numeric(p);
    const double closed = pair_rate_closed(c.g, 1.0, c.delta, c.Delta);
    r.measured = std::max(r.measured, rel_dev(numeric, closed));
  }
  const double anchor = pair_rate_closed(5.0, 1.0, 10.0, 0.0);
  const bool anchor_ok = std::abs(anchor - 0.78125) <= 1e-12;
  r.passed = r.measured <= r.tolerance && anchor_ok;
  r.detail = fmt::format("rate at g=5, delta=10, Delta=0: {:.12g} (expected 0.78125)", anchor);
  return r;
}

CheckResult check_boundary(const VerifyOptions&) {
  CheckResult r = make_result("4", "effective-model stability boundary");
  r.tolerance = kBoundaryTol;
  auto unstable = [](double Delta) {
    EffectiveModelParams p;
    p.g = 5.0;
    p.delta = 10.0;
    p.Delta = Delta;
    return !stability(drift_effective(p)).stable;
  };
  std::vector<double> roots;
  const auto grid = linspace(-2.0, 1.0, 301);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (unstable(grid[i]) == unstable(grid[i + 1])) continue;
    double lo = grid[i];
    double hi = grid[i + 1];
    const bool lo_state = unstable(lo);
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      (unstable(mid) == lo_state ? lo : hi) = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  const std::vector<double> expected{-1.0, -0.25};
  if (roots.size() != expected.size()) {
    r.measured = std::numeric_limits<double>::infinity();
    r.detail = fmt::format("found {} boundary crossings, expected 2", roots.size());
    return r;
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    r.measured = std::max(r.measured, std::abs(roots[i] - expected[i]));
  }
  const bool stable_near = !unstable(-0.2) && !unstable(-0.24);
  r.passed = r.measured <= r.tolerance && stable_near;
  r.detail = fmt::format("roots {:.9f}, {:.9f}; Delta=-0.2 and -0.24 {}", roots[0], roots[1],
                         stable_near ? "stable" : "NOT stable");
  return r;
}

CheckResult check_full_oracle(const VerifyOptions& opt) {
  CheckResult r = make_result("5", "full-model correlators against resonant closed form");
  r.tolerance = kOracleTol;
  std::string at;
  for (double n : {0.0, 50.0, 500.0}) {
    for (double delta : linspace(-15.0, 15.0, 10)) {
      const SpectralEvaluator ev(opt.full_drift(full_params(5.0, 0.0, delta, n)), n);
      for (double w : linspace(-20.0, 20.0, 10)) {
        const CorrelatorTriple num = ev.correlators(w);
        const CorrelatorTriple ref = full_model_correlators_resonant(5.0, 1.0, kGamma, delta, n, w);
        const double dev = std::max({rel_dev(num.n_plus, ref.n_plus),
                                     rel_dev(num.n_minus, ref.n_minus),
                                     std::abs(num.xi - ref.xi) / std::max(std::abs(ref.xi), 1e-300)});
        if (dev >= r.measured) {
          r.measured = dev;
          at = fmt::format("omega={:g} delta={:g} n_th={:g}", w, delta, n);
        }
      }
    }
  }
  r.passed = r.measured <= r.tolerance;
  r.detail = "worst at " + at;
  return r;
}

CheckResult check_invariants(const VerifyOptions& opt) {
  CheckResult r = make_result("6", "flux conservation, no intra-beam squeezing, physicality, E >= 0");
  double flux = 0.0;
  double intra = 0.0;
  double nu_min = std::numeric_limits<double>::infinity();
  double e_min = std::numeric_limits<double>::infinity();
  std::vector<std::pair<DriftMatrix, double>> systems;
  for (double n : {0.0, 50.0}) {
    systems.emplace_back(opt.full_drift(full_params(5.0, 0.0, 10.0, n)), n);
    systems.emplace_back(opt.full_drift(full_params(5.0, -0.2, 10.0, n)), n);
    systems.emplace_back(opt.full_drift(full_params(5.0, 0.0, 0.0, n)), n);
    systems.emplace_back(opt.full_drift(full_params(std::sqrt(2.5e4 * 5e-2), 0.0, 0.0, n, 5e-2)), n);
  }
  for (double Delta : {0.0, -0.2, 0.7}) {
    EffectiveModelParams p;
    p.g = 5.0;
    p.delta = 10.0;
    p.Delta = Delta;
    systems.emplace_back(drift_effective(p), 0.0);
  }
  const int ia = 0;  // a+ in both orderings
  const int ib = 2;  // a-
  for (const auto& [d, n] : systems) {
    const SpectralEvaluator ev(d, n);
    for (double w : linspace(-20.0, 20.0, 81)) {
      flux = std::max(flux, flux_deviation(scattering_matrix(d, w)));
      const Eigen::MatrixXcd W = output_noise_matrix(d, w, n);
      const double scale = std::max(1.0, W.cwiseAbs().maxCoeff());
      intra = std::max({intra, std::abs(W(ia, ia)) / scale, std::abs(W(ib, ib)) / scale});
      const CorrelatorTriple t = ev.correlators(w);
      nu_min = std::min(nu_min, symplectic_spectrum(t).front());
      e_min = std::min(e_min, spectral_density(ev, w));
    }
  }
  const bool ok_flux = flux <= kFluxTol;
  const bool ok_intra = intra <= kIntraBeamTol;
  const bool ok_nu = nu_min >= 0.5 - kSymplecticTol;
  const bool ok_e = e_min >= 0.0;
  r.passed = ok_flux && ok_intra && ok_nu && ok_e;
  r.measured = flux;
  r.tolerance = kFluxTol;
  r.detail = fmt::format(
      "flux {:.2e} (tol {:g}); intra-beam {:.2e} (tol {:g}); min symplectic eigenvalue {:.12g} "
      "(>= 0.5 - {:g}); min E {:.3g}",
      flux, kFluxTol, intra, kIntraBeamTol, nu_min, kSymplecticTol, e_min);
  return r;
}

CheckResult check_wannier(const VerifyOptions&) {
  CheckResult r = make_result("7", "coarse-graining kernel norm");
  r.tolerance = kKernelTailLimit;
  constexpr std::int64_t cutoff = 100000;
  bool within_bound = true;
  for (int M : {1, 2, 3, 8, 64}) {
    const double bound = kernel_tail_bound(M, cutoff);
    for (int l = 0; l < M; ++l) {
      const double deficit = 1.0 - kernel_norm(M, l, cutoff);
      r.measured = std::max(r.measured, std::abs(deficit));
      if (deficit < -1e-12 || deficit > bound) within_bound = false;
    }
    if (bound >= kKernelTailLimit) within_bound = false;
  }
  bool identity = wannier_kernel(1, 0, 0) == std::complex<double>(1.0);
  for (std::int64_t k = -1000; k <= 1000; ++k) {
    if (k != 0 && wannier_kernel(1, 0, k) != std::complex<double>(0.0)) identity = false;
  }
  r.passed = within_bound && identity && r.measured < r.tolerance;
  r.detail = fmt::format("max |1 - norm| at cutoff {}; within analytic bound: {}; M=1 identity: {}",
                         cutoff, within_bound, identity);
  return r;
}

CheckResult check_filter(const VerifyOptions& opt) {
  CheckResult r = make_result("8", "filtered entanglement converges to E[0]");
  r.tolerance = kFilterFinalTol;
  const double n = 0.0;
  const SpectralEvaluator ev(opt.full_drift(full_params(std::sqrt(1e3 * kGamma), 0.0, 0.0, n)), n);
  const double target = spectral_density(ev, 0.0);
  std::vector<double> devs;
  for (double tau : {10.0, 1e2, 1e3, 1e4}) {
    const double e = filtered_entanglement(ev, FilterSpec{0.0, tau}, FilterSpec{0.0, tau});
    devs.push_back(std::abs(e - target) / target);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < devs.size(); ++i) decreasing = decreasing && devs[i] < devs[i - 1];
  r.measured = devs.back();
  r.passed = decreasing && r.measured < r.tolerance;
  r.detail = fmt::format("relative deviations {:.4g}, {:.4g}, {:.4g}, {:.4g}; strictly decreasing: {}",
                         devs[0], devs[1], devs[2], devs[3], decreasing);
  return r;
}

double rate(const VerifyOptions& opt, const FullModelParams& p) {
  return entanglement_rate(opt.full_drift(p), p.n_th, kRateTol).gamma_E;
}

CheckResult check_rate_map(const VerifyOptions& opt) {
  CheckResult r = make_result("9a", "entanglement rate peaks at delta = Delta = 0");
  r.tolerance = 1.0;  // grid cells
  const auto deltas = linspace(-15.0, 15.0, 25);
  const auto Deltas = linspace(-1.5, 1.5, 25);
  double best = -1.0;
  int bi = -1;
  int bj = -1;
  int unstable = 0;
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 25; ++j) {
      const DriftMatrix d = opt.full_drift(full_params(5.0, Deltas[j], deltas[i], 0.0));
      if (!stability(d).stable) {
        ++unstable;
        continue;
      }
      const double g = entanglement_rate(d, 0.0, kRateTol).gamma_E;
      if (g > best) {
        best = g;
        bi = i;
        bj = j;
      }
    }
  }
  r.measured = std::max(std::abs(bi - 12), std::abs(bj - 12));
  r.passed = bi >= 0 && r.measured <= r.tolerance;
  r.detail = fmt::format("max {:.6g} at delta={:g}, Delta={:g} ({} unstable points skipped)", best,
                         bi >= 0 ? deltas[bi] : NAN, bj >= 0 ? Deltas[bj] : NAN, unstable);
  return r;
}

CheckResult check_boundary_contrast(const VerifyOptions& opt) {
  CheckResult r = make_result("9b", "near the optical boundary E_max is large but the rate is small");
  const FullModelParams edge = full_params(5.0, -0.24, 10.0, 0.0);
  const FullModelParams centre = full_params(5.0, 0.0, 0.0, 0.0);
  const FullModelParams detuned = full_params(5.0, 0.0, 10.0, 0.0);
  const RateResult a = entanglement_rate(opt.full_drift(edge), 0.0, kRateTol);
  const RateResult b = entanglement_rate(opt.full_drift(centre), 0.0, kRateTol);
  const RateResult c = entanglement_rate(opt.full_drift(detuned), 0.0, kRateTol);
  r.measured = a.gamma_E / b.gamma_E;
  r.tolerance = 1.0;
  r.passed = a.gamma_E < b.gamma_E;
  r.detail = fmt::format(
      "rate {:.6g} (E_max {:.4g}) at Delta=-0.24, delta=10 vs rate {:.6g} at the origin; "
      "E_max at Delta=0, delta=10 is {:.4g}",
      a.gamma_E, a.E_max, b.gamma_E, c.E_max);
  return r;
}

CheckResult check_two_peaks(const VerifyOptions& opt) {
  CheckResult r = make_result("9c", "output spectrum has two peaks delta apart, the one near delta mechanical");
  r.tolerance = kPeakSeparationTol;
  const double delta = 10.0;
  const SpectralEvaluator ev(opt.full_drift(full_params(5.0, 0.0, delta, 50.0)), 50.0);
  auto total = [&](double w) { return ev.spectrum(w).total; };

  const double step = 1e-3;
  const auto grid = linspace(-20.0, 20.0, 40001);
  std::vector<double> s;
  for (double w : grid) s.push_back(total(w));

  std::vector<std::pair<double, double>> peaks;  // (height, omega)
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    if (s[i] > s[i - 1] && s[i] >= s[i + 1]) {
      const auto refined = boost::math::tools::brent_find_minima(
          [&](double w) { return -total(w); }, grid[i] - step, grid[i] + step, 50);
      peaks.emplace_back(-refined.second, refined.first);
    }
  }
  // The two maxima differ by four decades in height, so they are counted as
  // local maxima of the smooth spectrum rather than by relative prominence.
  std::sort(peaks.rbegin(), peaks.rend());
  if (peaks.size() < 2) {
    r.measured = std::numeric_limits<double>::infinity();
    r.detail = fmt::format("found {} peak(s)", peaks.size());
    return r;
  }
  double w_lo = std::min(peaks[0].second, peaks[1].second);
  double w_hi = std::max(peaks[0].second, peaks[1].second);
  const double separation = w_hi - w_lo;
  const double w_mech = std::abs(w_lo - delta) < std::abs(w_hi - delta) ? w_lo : w_hi;
  const SpectrumPoint at = ev.spectrum(w_mech);
  const double mech_share = at.mechanical_part / at.total;
  r.measured = std::abs(separation - delta) / delta;
  r.passed = peaks.size() == 2 && r.measured <= r.tolerance && at.mechanical_part > at.optical_part;
  r.detail = fmt::format(
      "{} local maxima; top two at {:.6g} and {:.6g} (separation {:.6g}); at the peak near "
      "delta the mechanical input supplies {:.4g} of the intensity (needs > 0.5)",
      peaks.size(), w_lo, w_hi, separation, mech_share);
  return r;
}

CheckResult check_thermal_slope(const VerifyOptions& opt) {
  CheckResult r = make_result("9d", "rate falls as 1/n_th");
  r.tolerance = kSlopeTol;
  std::vector<double> x;
  std::vector<double> y;
  for (int k = 0; k <= 8; ++k) {
    const double n = std::pow(10.0, 2.0 + 0.25 * k);
    x.push_back(std::log(n));
    y.push_back(std::log(rate(opt, full_params(5.0, 0.0, 0.0, n))));
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  r.measured = std::abs(slope + 1.0);
  r.passed = r.measured <= r.tolerance;
  r.detail = fmt::format("fitted slope {:.4f} over n_th in [1e2, 1e4] at g=5", slope);
  return r;
}

CheckResult check_width(const VerifyOptions& opt) {
  CheckResult r = make_result("9e", "peak width of E is not set by the mechanical linewidth");
  r.tolerance = 100.0 * kGamma;
  double narrowest = std::numeric_limits<double>::infinity();
  for (double n : {0.0, 50.0}) {
    narrowest = std::min(
        narrowest, entanglement_rate(opt.full_drift(full_params(5.0, 0.0, 0.0, n)), n, kRateTol).fwhm);
  }
  r.measured = narrowest;
  r.passed = narrowest > r.tolerance;
  r.detail = fmt::format("narrowest FWHM {:.6g} vs 100 Gamma = {:g}", narrowest, r.tolerance);
  return r;
}

// Two-mode squeezed thermal state: thermal occupations t1, t2, squeezing s.
CorrelatorTriple squeezed_thermal(double t1, double t2, double s, double phase) {
  const double c = std::cosh(s);
  const double sh = std::sinh(s);
  CorrelatorTriple t;
  t.n_plus = (t1 + 0.5) * c * c + (t2 + 0.5) * sh * sh;
  t.n_minus = (t1 + 0.5) * sh * sh + (t2 + 0.5) * c * c;
  t.xi = std::polar((t1 + t2 + 1.0) * c * sh, phase);
  return t;
}

CheckResult check_paths(const VerifyOptions&) {
  CheckResult r = make_result("10", "general log-negativity equals the two-mode fast path");
  r.tolerance = kPathTol;
  std::mt19937_64 rng(kSeed + 10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto draw = [&] {
    return squeezed_thermal(3.0 * u(rng), 3.0 * u(rng), 2.0 * u(rng), 2.0 * std::numbers::pi * u(rng));
  };
  double path = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CorrelatorTriple t = draw();
    path = std::max(path, std::abs(log_negativity_general(covariance_from_correlators(t)) -
                                   log_negativity_two_mode(t)));
  }
  double additivity = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CorrelatorTriple a = draw();
    const CorrelatorTriple b = draw();
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(8, 8);
    v.topLeftCorner(4, 4) = covariance_from_correlators(a).entries();
    v.bottomRightCorner(4, 4) = covariance_from_correlators(b).entries();
    const double joint = log_negativity_general(v, {Beam::One, Beam::Two, Beam::One, Beam::Two});
    additivity = std::max(additivity, std::abs(joint - log_negativity_two_mode(a) -
                                                   log_negativity_two_mode(b)));
  }
  r.measured = std::max(path, additivity);
  r.passed = r.measured <= r.tolerance;
  r.detail = fmt::format("two-mode path {:.2e}; 8x8 additivity {:.2e}", path, additivity);
  return r;
}

const std::map<std::string, Check>& registry() {
  static const std::map<std::string, Check> checks{
      {"1", check_resonant},      {"2", check_scattering},         {"3", check_pair_rate},
      {"4", check_boundary},      {"5", check_full_oracle},        {"6", check_invariants},
      {"7", check_wannier},       {"8", check_filter},             {"9a", check_rate_map},
      {"9b", check_boundary_contrast}, {"9c", check_two_peaks},    {"9d", check_thermal_slope},
      {"9e", check_width},        {"10", check_paths}};
  return checks;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"1", "2",  "3",  "4",  "5",  "6",  "7",
                                            "8", "9a", "9b", "9c", "9d", "9e", "10"};
  return ids;
}

CheckResult run_check(const std::string& id, const VerifyOptions& opt) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument(fmt::format("unknown check '{}'", id));
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = it->second(opt);
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "check raised an exception";
    r.passed = false;
    r.measured = std::numeric_limits<double>::infinity();
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (const std::string& id : check_ids()) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) {
      continue;
    }
    out.push_back(run_check(id, opt));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

void write_report_text(const std::vector<CheckResult>& results, std::ostream& out) {
  for (const CheckResult& r : results) {
    out << fmt::format("CRITERION {:<3} {}  measured={:.3e} tol={:.3e} time={:.2f}s  {}: {}\n",
                       r.id, r.passed ? "PASS" : "FAIL", r.measured, r.tolerance, r.seconds,
                       r.title, r.detail);
  }
  const auto passed = std::count_if(results.begin(), results.end(),
                                    [](const CheckResult& r) { return r.passed; });
  out << fmt::format("{} of {} checks passed\n", passed, results.size());
}

void write_report_json(const std::vector<CheckResult>& results, std::ostream& out) {
  nlohmann::json doc;
  doc["passed"] = all_passed(results);
  doc["checks"] = nlohmann::json::array();
  for (const CheckResult& r : results) {
    doc["checks"].push_back({{"id", r.id},
                             {"title", r.title},
                             {"passed", r.passed},
                             {"measured", std::isfinite(r.measured) ? nlohmann::json(r.measured)
                                                                    : nlohmann::json(nullptr)},
                             {"tolerance", r.tolerance},
                             {"detail", r.detail},
                             {"seconds", r.seconds}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace entrate
