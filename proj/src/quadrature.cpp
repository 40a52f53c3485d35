#include "entrate/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace entrate {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

// Tails live on u in [0, 1) and are mapped back with x = a ± scale·u/(1-u).
enum class Kind { LeftTail, Segment, RightTail };

struct Panel {
  Kind kind;
  double a;
  double b;
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

struct Problem {
  const RealFunction& f;
  double lo = 0.0;
  double hi = 0.0;
  double scale = 1.0;

  double eval(Kind kind, double u) const {
    if (kind == Kind::Segment) return f(u);
    const double v = 1.0 - u;
    const double jac = scale / (v * v);
    return kind == Kind::RightTail ? f(hi + scale * u / v) * jac : f(lo - scale * u / v) * jac;
  }

  // The rule is applied on [-1, 1] and rescaled here: Boost 1.74 returns the
  // error estimate of a non-adaptive call without the interval half-width.
  void estimate(Panel& p) const {
    const double mid = 0.5 * (p.a + p.b);
    const double half = 0.5 * (p.b - p.a);
    auto g = [&](double x) { return eval(p.kind, mid + half * x); };
    double error = 0.0;
    double l1 = 0.0;
    p.value = half * Rule::integrate(g, -1.0, 1.0, 0, 0.0, &error, &l1);
    p.error = half * error;
    p.l1 = half * l1;
  }
};

bool splittable(const Panel& p) {
  const double mid = 0.5 * (p.a + p.b);
  return mid > p.a && mid < p.b &&
         (p.b - p.a) > 1e-13 * std::max({1e-300, std::abs(p.a), std::abs(p.b)});
}

QuadratureResult run(const Problem& prob, std::vector<Panel> panels, const QuadratureOptions& opt) {
  if (!(opt.rel_tol >= 0.0) || !(opt.abs_tol >= 0.0) || opt.max_panels < 1) {
    throw std::invalid_argument("invalid quadrature options");
  }
  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> queue(worse);
  std::vector<Panel> done;  // panels that cannot be split further
  double err = 0.0;
  double l1 = 0.0;
  for (Panel& p : panels) {
    prob.estimate(p);
    err += p.error;
    l1 += p.l1;
    queue.push(p);
  }
  int count = static_cast<int>(panels.size());
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * l1); };
  while (!queue.empty() && err > target() && count < opt.max_panels) {
    Panel worst = queue.top();
    queue.pop();
    if (!splittable(worst)) {
      done.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left{worst.kind, worst.a, mid};
    Panel right{worst.kind, mid, worst.b};
    prob.estimate(left);
    prob.estimate(right);
    err += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    queue.push(left);
    queue.push(right);
    ++count;
  }
  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) {
    return x.kind != y.kind ? x.kind < y.kind : x.a < y.a;
  });
  QuadratureResult r;
  for (const Panel& p : done) {
    r.value += p.value;
    r.error += p.error;
  }
  r.converged = r.error <= target() * (1.0 + 1e-12);
  return r;
}

}  // namespace

QuadratureResult integrate_segment(const RealFunction& f, double a, double b,
                                   const QuadratureOptions& opt) {
  if (a == b) return {};
  if (a > b) {
    QuadratureResult r = integrate_segment(f, b, a, opt);
    r.value = -r.value;
    return r;
  }
  const Problem prob{f};
  return run(prob, {Panel{Kind::Segment, a, b}}, opt);
}

QuadratureResult integrate_tail(const RealFunction& f, double a, int direction, double scale,
                                const QuadratureOptions& opt) {
  if (direction != 1 && direction != -1) {
    throw std::invalid_argument("tail direction must be +1 or -1");
  }
  if (!(scale > 0.0)) throw std::invalid_argument("tail scale must be positive");
  const Problem prob{f, a, a, scale};
  return run(prob, {Panel{direction > 0 ? Kind::RightTail : Kind::LeftTail, 0.0, 1.0}}, opt);
}

QuadratureResult integrate_real_line(const RealFunction& f, std::vector<double> breakpoints,
                                     const QuadratureOptions& opt) {
  breakpoints.erase(std::remove_if(breakpoints.begin(), breakpoints.end(),
                                   [](double x) { return !std::isfinite(x); }),
                    breakpoints.end());
  if (breakpoints.empty()) breakpoints.push_back(0.0);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  const double lo = breakpoints.front();
  const double hi = breakpoints.back();
  const Problem prob{f, lo, hi, std::max({1.0, std::abs(lo), std::abs(hi)})};

  std::vector<Panel> panels{{Kind::LeftTail, 0.0, 1.0}};
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    panels.push_back({Kind::Segment, breakpoints[i], breakpoints[i + 1]});
  }
  panels.push_back({Kind::RightTail, 0.0, 1.0});
  return run(prob, std::move(panels), opt);
}

std::vector<double> resonance_breakpoints(const Eigen::VectorXcd& eigenvalues) {
  std::vector<double> pts{0.0};
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double centre = -eigenvalues(i).imag();
    const double width = std::abs(eigenvalues(i).real());
    pts.push_back(centre);
    if (width == 0.0) continue;
    for (double k : {1.0, 10.0, 100.0}) {
      pts.push_back(centre - k * width);
      pts.push_back(centre + k * width);
    }
  }
  std::sort(pts.begin(), pts.end());
  // Merge nodes closer than a relative 1e-12 so no segment is degenerate.
  std::vector<double> out;
  for (double p : pts) {
    if (out.empty() || std::abs(p - out.back()) > 1e-12 * std::max(1.0, std::abs(p))) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace entrate
