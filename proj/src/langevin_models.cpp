#include "entrate/langevin_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <fmt/core.h>

namespace entrate {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kStabilityTolerance = 1e-9;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const char* channel_name(Channel c) {
  switch (c) {
    case Channel::APlus: return "a_plus";
    case Channel::APlusDag: return "a_plus_dag";
    case Channel::AMinus: return "a_minus";
    case Channel::AMinusDag: return "a_minus_dag";
    case Channel::B: return "b";
    case Channel::BDag: return "b_dag";
  }
  return "?";
}

void FullModelParams::validate() const {
  require(std::isfinite(g) && std::isfinite(kappa) && std::isfinite(Gamma) &&
              std::isfinite(Delta) && std::isfinite(delta) && std::isfinite(n_th),
          "model parameters must be finite");
  require(kappa > 0.0, "kappa must be positive");
  require(Gamma > 0.0, "Gamma must be positive");
  require(g >= 0.0, "g must be non-negative");
  require(n_th >= 0.0, "n_th must be non-negative");
}

void EffectiveModelParams::validate() const {
  require(std::isfinite(g) && std::isfinite(kappa) && std::isfinite(Delta) &&
              std::isfinite(delta),
          "model parameters must be finite");
  require(kappa > 0.0, "kappa must be positive");
  require(g >= 0.0, "g must be non-negative");
  require(delta != 0.0, "effective model needs delta != 0");
}

bool within_adiabatic_regime(const EffectiveModelParams& p, double margin) {
  const double d = std::abs(p.delta);
  return margin * std::abs(p.Delta) <= d && margin * p.kappa <= d && margin * p.g <= d;
}

int DriftMatrix::index_of(Channel c) const {
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (ordering[i] == c) return static_cast<int>(i);
  }
  return -1;
}

DriftMatrix drift_full(const FullModelParams& p) {
  p.validate();
  const double k2 = 0.5 * p.kappa;
  const std::complex<double> c = kI * (0.5 * p.g);
  DriftMatrix d;
  d.kappa = p.kappa;
  d.ordering = {Channel::APlus, Channel::APlusDag, Channel::AMinus,
                Channel::AMinusDag, Channel::B, Channel::BDag};
  d.decay.resize(6);
  d.decay << p.kappa, p.kappa, p.kappa, p.kappa, p.Gamma, p.Gamma;
  auto& m = d.m;
  m = Eigen::MatrixXcd::Zero(6, 6);
  m(0, 0) = kI * p.Delta - k2;
  m(0, 4) = c;
  m(1, 1) = -kI * p.Delta - k2;
  m(1, 5) = -c;
  m(2, 2) = kI * p.Delta - k2;
  m(2, 5) = c;
  m(3, 3) = -kI * p.Delta - k2;
  m(3, 4) = -c;
  m(4, 4) = -kI * p.delta - 0.5 * p.Gamma;
  m(4, 0) = c;
  m(4, 3) = c;
  m(5, 5) = kI * p.delta - 0.5 * p.Gamma;
  m(5, 2) = -c;
  m(5, 1) = -c;
  return d;
}

DriftMatrix drift_effective(const EffectiveModelParams& p) {
  p.validate();
  const double gm = p.mediated_coupling();
  const double k2 = 0.5 * p.kappa;
  DriftMatrix d;
  d.kappa = p.kappa;
  d.ordering = {Channel::APlus, Channel::APlusDag, Channel::AMinus, Channel::AMinusDag};
  d.decay = Eigen::VectorXd::Constant(4, p.kappa);
  auto& m = d.m;
  m = Eigen::MatrixXcd::Zero(4, 4);
  const std::complex<double> rot = kI * (p.Delta + gm);
  m(0, 0) = rot - k2;
  m(1, 1) = -rot - k2;
  m(2, 2) = rot - k2;
  m(3, 3) = -rot - k2;
  m(0, 3) = kI * gm;
  m(1, 2) = -kI * gm;
  m(2, 1) = kI * gm;
  m(3, 0) = -kI * gm;
  return d;
}

double doubled_structure_deviation(const DriftMatrix& d) {
  const int n = d.dim();
  auto partner = [](int i) { return i ^ 1; };
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      worst = std::max(worst, std::abs(std::conj(d.m(partner(i), partner(j))) - d.m(i, j)));
    }
  }
  return worst;
}

Eigen::VectorXcd drift_eigenvalues(const DriftMatrix& d) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(d.m, false);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed on drift matrix");
  }
  return es.eigenvalues();
}

StabilityReport stability(const DriftMatrix& d) {
  const Eigen::VectorXcd ev = drift_eigenvalues(d);
  StabilityReport r;
  r.max_real_part = ev.real().maxCoeff();
  const double tol = kStabilityTolerance * d.kappa;
  r.stable = r.max_real_part < tol;
  r.marginal = std::abs(r.max_real_part) <= tol;
  return r;
}

std::vector<double> stability_boundary_effective(double g, double kappa, double delta) {
  require(delta != 0.0, "stability boundary needs delta != 0");
  require(kappa > 0.0, "kappa must be positive");
  const double b = g * g / (2.0 * delta);
  const double c = 0.25 * kappa * kappa;
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) return {};
  // Roots of x^2 + b x + c without cancellation.
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::vector<double> roots;
  if (q == 0.0) {
    roots = {0.0, 0.0};
  } else {
    roots = {q, c / q};
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double max_real_part_effective(const EffectiveModelParams& p) {
  p.validate();
  const double arg = -(2.0 * p.mediated_coupling() + p.Delta) * p.Delta;
  return -0.5 * p.kappa + std::sqrt(std::max(0.0, arg));
}

CellMapping map_cell_params(const CellParams& c, double kappa, double Gamma,
                            double Omega, double n_th, double Delta) {
  const double s = c.K1 * c.K1 + c.K2 * c.K2;
  require(s > 0.0, "cell hopping rates must not both vanish");
  CellMapping out;
  out.J = std::sqrt(s);
  out.g0_eff = c.g0 * c.K1 * c.K2 / s;
  out.params.g = 2.0 * std::abs(out.g0_eff) * std::abs(c.alpha);
  out.params.kappa = kappa;
  out.params.Gamma = Gamma;
  out.params.Delta = Delta;
  out.params.delta = Omega - out.J;
  out.params.n_th = n_th;
  out.params.validate();
  return out;
}

}  // namespace entrate
