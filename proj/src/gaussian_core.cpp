#include "entrate/gaussian_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <fmt/core.h>

#include "entrate/errors.hpp"

namespace entrate {
namespace {

// a*b - c*d with a single rounding error (Kahan's FMA trick).
double diff_of_products(double a, double b, double c, double d) {
  const double w = c * d;
  const double e = std::fma(-c, d, w);
  const double f = std::fma(a, b, -w);
  return f + e;
}

void require_finite(const CorrelatorTriple& t) {
  if (!std::isfinite(t.n_plus) || !std::isfinite(t.n_minus) ||
      !std::isfinite(t.xi.real()) || !std::isfinite(t.xi.imag())) {
    throw std::invalid_argument("correlator triple has non-finite entries");
  }
}

void require_symmetric(const Eigen::MatrixXd& v) {
  if (v.rows() != v.cols() || v.rows() == 0 || v.rows() % 2 != 0) {
    throw std::invalid_argument(
        fmt::format("covariance matrix must be square with even dimension, got {}x{}",
                    v.rows(), v.cols()));
  }
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("covariance matrix is not symmetric");
  }
}

}  // namespace

double gram_determinant(const CorrelatorTriple& t) {
  if (t.gram_det) return *t.gram_det;
  const double re = t.xi.real();
  const double im = t.xi.imag();
  const double partial = diff_of_products(t.n_plus, t.n_minus, re, re);
  const double w = im * im;
  const double e = std::fma(-im, im, w);
  return (partial - w) + e;
}

double eta_minus(const CorrelatorTriple& t) {
  const double mean = 0.5 * (t.n_plus + t.n_minus);
  const double half_diff = 0.5 * (t.n_plus - t.n_minus);
  const double eta_plus = mean + std::hypot(half_diff, std::abs(t.xi));
  if (!(eta_plus > 0.0)) {
    throw UnphysicalState("correlator matrix has no positive eigenvalue");
  }
  return gram_determinant(t) / eta_plus;
}

double separability_margin(const CorrelatorTriple& t) {
  const double p = t.occupation_plus.value_or(t.n_plus - 0.5);
  const double q = t.occupation_minus.value_or(t.n_minus - 0.5);
  const double s = 0.5 * (p + q);
  const double r = std::hypot(0.5 * (p - q), std::abs(t.xi));
  // x = |ξ|² - pq, taken directly for weak occupations and from the Gram
  // determinant (det = 1/4 + s - x) for strong ones.
  double x = 0.0;
  if (p + q < 1.0) {
    x = -diff_of_products(p, q, t.xi.real(), t.xi.real()) + t.xi.imag() * t.xi.imag();
  } else {
    x = 0.25 + s - gram_determinant(t);
  }
  if (x == 0.0) return 0.0;
  const double eta_plus = 0.5 + s + r;
  return x * (2.0 + 1.0 / (r + s)) / eta_plus;
}

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries,
                                   std::vector<Beam> mode_partition)
    : entries_(std::move(entries)), partition_(std::move(mode_partition)) {
  require_symmetric(entries_);
  if (static_cast<int>(partition_.size()) != modes()) {
    throw std::invalid_argument(fmt::format(
        "mode partition has {} entries for {} modes", partition_.size(), modes()));
  }
}

Eigen::MatrixXd SymplecticForm::matrix() const {
  if (dim <= 0 || dim % 2 != 0) {
    throw std::invalid_argument("symplectic form needs a positive even dimension");
  }
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; i += 2) {
    j(i, i + 1) = 1.0;
    j(i + 1, i) = -1.0;
  }
  return j;
}

CovarianceMatrix covariance_from_correlators(const CorrelatorTriple& t) {
  require_finite(t);
  const double re = t.xi.real();
  const double im = t.xi.imag();
  Eigen::Matrix4d v;
  v << t.n_plus, 0.0, re, im,
       0.0, t.n_plus, im, -re,
       re, im, t.n_minus, 0.0,
       im, -re, 0.0, t.n_minus;
  return CovarianceMatrix(v, {Beam::One, Beam::Two});
}

double log_negativity_two_mode(const CorrelatorTriple& t) {
  require_finite(t);
  if (t.n_plus < 0.5 - kPhysicalityTolerance || t.n_minus < 0.5 - kPhysicalityTolerance) {
    throw UnphysicalState(fmt::format(
        "occupations below the vacuum floor: n_plus={}, n_minus={}", t.n_plus, t.n_minus));
  }
  const double margin = separability_margin(t);
  if (margin <= 0.0) return 0.0;
  if (margin < 0.5) return -std::log1p(-margin);
  const double two_eta = 2.0 * eta_minus(t);
  if (!(two_eta > 0.0)) {
    throw UnphysicalState(fmt::format("2*eta_minus = {} is not positive", two_eta));
  }
  return std::max(0.0, -std::log(two_eta));
}

std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& v) {
  require_symmetric(v);
  const Eigen::Index n = v.rows();
  const Eigen::MatrixXd j = SymplecticForm{static_cast<int>(n)}.matrix();
  std::vector<double> out;
  out.reserve(n / 2);

  // For positive-definite V, i V^{1/2} J V^{1/2} is Hermitian with eigenvalues
  // ±ν; its eigensolver is backward stable even for strongly squeezed states.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sym(v);
  if (sym.info() == Eigen::Success && sym.eigenvalues().minCoeff() > 0.0) {
    const Eigen::MatrixXd root = sym.operatorSqrt();
    const Eigen::MatrixXd a = root * j * root;
    const Eigen::MatrixXcd h = std::complex<double>(0.0, 1.0) * a.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> herm(h, Eigen::EigenvaluesOnly);
    if (herm.info() != Eigen::Success) throw SingularMatrix("symplectic eigensolver failed");
    for (Eigen::Index k = n / 2; k < n; ++k) out.push_back(herm.eigenvalues()(k));
    return out;
  }

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> gen(
      (std::complex<double>(0.0, 1.0) * (j * v)).cast<std::complex<double>>(), false);
  if (gen.info() != Eigen::Success) throw SingularMatrix("symplectic eigensolver failed");
  std::vector<double> moduli;
  for (Eigen::Index k = 0; k < n; ++k) moduli.push_back(std::abs(gen.eigenvalues()(k)));
  std::sort(moduli.begin(), moduli.end());
  for (std::size_t k = 0; k + 1 < moduli.size(); k += 2) {
    const double a = moduli[k];
    const double b = moduli[k + 1];
    if (std::abs(a - b) > 1e-10 * std::max(1.0, b)) {
      throw UnphysicalState("eigenvalues of iJV do not pair into conjugates");
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

std::vector<double> symplectic_spectrum(const CorrelatorTriple& t) {
  require_finite(t);
  const double det = gram_determinant(t);
  const double diff = std::abs(t.n_plus - t.n_minus);
  const double root = std::sqrt(diff * diff + 4.0 * std::max(0.0, det));
  const double hi = 0.5 * (root + diff);
  const double lo = hi > 0.0 ? det / hi : 0.0;
  return {lo, hi};
}

Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& v,
                                  const std::vector<Beam>& partition) {
  if (static_cast<Eigen::Index>(2 * partition.size()) != v.rows()) {
    throw std::invalid_argument("partition size does not match covariance dimension");
  }
  Eigen::VectorXd sign = Eigen::VectorXd::Ones(v.rows());
  for (std::size_t mode = 0; mode < partition.size(); ++mode) {
    if (partition[mode] == Beam::Two) sign(2 * mode + 1) = -1.0;
  }
  return sign.asDiagonal() * v * sign.asDiagonal();
}

double log_negativity_general(const Eigen::MatrixXd& v,
                              const std::vector<Beam>& partition) {
  const auto spectrum = symplectic_spectrum(v);
  if (spectrum.front() < 0.5 - kPhysicalityTolerance) {
    throw UnphysicalState(
        fmt::format("symplectic eigenvalue {} violates the uncertainty bound", spectrum.front()));
  }
  double e = 0.0;
  for (double nu : symplectic_spectrum(partial_transpose(v, partition))) {
    if (nu < 0.5) e -= std::log(2.0 * nu);
  }
  return std::max(0.0, e);
}

}  // namespace entrate
