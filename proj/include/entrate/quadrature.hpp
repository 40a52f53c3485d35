#pragma once

// Globally adaptive Gauss-Kronrod integration over the real line for spectra
// that are smooth apart from narrow Lorentzian features at known frequencies.

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace entrate {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;  // false if the panel budget ran out first
};

using RealFunction = std::function<double(double)>;

struct QuadratureOptions {
  double rel_tol = 1e-10;     // relative to the integral of |f|
  double abs_tol = 0.0;
  int max_panels = 4000;
};

QuadratureResult integrate_segment(const RealFunction& f, double a, double b,
                                   const QuadratureOptions& opt = {});

/// Integral over [a, +inf) (direction = +1) or (-inf, a] (direction = -1).
/// `scale` sets the length over which the substitution x = a ± scale·u/(1-u)
/// stretches the unit interval.
QuadratureResult integrate_tail(const RealFunction& f, double a, int direction,
                                double scale, const QuadratureOptions& opt = {});

/// Integral over the whole real line. Breakpoints seed the initial panels;
/// refinement always bisects the panel with the largest error estimate, so
/// the tolerance applies to the total rather than to each piece. Panels are
/// summed in order of position, which keeps the result deterministic.
QuadratureResult integrate_real_line(const RealFunction& f, std::vector<double> breakpoints,
                                     const QuadratureOptions& opt = {});

/// Nodes bracketing every resonance of a linear system: for each eigenvalue λ
/// the frequency -Im λ and offsets ±{1, 10, 100}·|Re λ| around it, plus 0.
std::vector<double> resonance_breakpoints(const Eigen::VectorXcd& eigenvalues);

}  // namespace entrate
