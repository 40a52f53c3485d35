#include "entrate/scattering_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/core.h>

#include "entrate/errors.hpp"

namespace entrate {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kMinRcond = 1e-14;

bool is_creator(Channel c) {
  return c == Channel::APlusDag || c == Channel::AMinusDag || c == Channel::BDag;
}

bool is_mechanical(Channel c) { return c == Channel::B || c == Channel::BDag; }

int require_channel(const DriftMatrix& d, Channel c) {
  const int i = d.index_of(c);
  if (i < 0) {
    throw std::invalid_argument(
        fmt::format("drift matrix has no {} channel", channel_name(c)));
  }
  return i;
}

}  // namespace

ScatteringMatrix scattering_matrix(const DriftMatrix& d, double omega) {
  const int n = d.dim();
  const Eigen::MatrixXcd a = d.m + kI * omega * Eigen::MatrixXcd::Identity(n, n);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  if (!(lu.rcond() > kMinRcond)) {
    throw SingularMatrix(fmt::format("m + i*omega is singular at omega = {}", omega));
  }
  const Eigen::VectorXd sd = d.decay.cwiseSqrt();
  ScatteringMatrix s;
  s.omega = omega;
  s.s = Eigen::MatrixXcd::Identity(n, n) + sd.asDiagonal() * lu.inverse() * sd.asDiagonal();
  return s;
}

double flux_deviation(const ScatteringMatrix& s) {
  const Eigen::Index n = s.s.rows();
  Eigen::VectorXcd k(n);
  for (Eigen::Index i = 0; i < n; ++i) k(i) = (i % 2 == 0) ? 1.0 : -1.0;
  const Eigen::MatrixXcd kk = k.asDiagonal();
  const Eigen::MatrixXcd r = s.s * kk * s.s.adjoint() - kk;
  const double norm2 = std::max(1.0, s.s.cwiseAbs2().maxCoeff());
  return r.cwiseAbs().maxCoeff() / norm2;
}

double reality_pairing_deviation(const DriftMatrix& d, double omega) {
  const auto plus = scattering_matrix(d, omega).s;
  const auto minus = scattering_matrix(d, -omega).s;
  double worst = 0.0;
  for (int i = 0; i < d.dim(); ++i) {
    for (int j = 0; j < d.dim(); ++j) {
      worst = std::max(worst, std::abs(plus(i ^ 1, j ^ 1) - std::conj(minus(i, j))));
    }
  }
  return worst;
}

Eigen::MatrixXd input_noise_matrix(const DriftMatrix& d, double n_th) {
  const int n = d.dim();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const Channel ch = d.ordering[i];
    if (is_creator(ch)) continue;
    const int partner = i ^ 1;
    if (is_mechanical(ch)) {
      c(i, partner) = n_th + 1.0;
      c(partner, i) = n_th;
    } else {
      c(i, partner) = 1.0;
    }
  }
  return c;
}

Eigen::MatrixXcd output_noise_matrix(const DriftMatrix& d, double omega, double n_th) {
  const Eigen::MatrixXcd c = input_noise_matrix(d, n_th).cast<std::complex<double>>();
  return scattering_matrix(d, omega).s * c * scattering_matrix(d, -omega).s.transpose();
}

CorrelatorTriple output_correlators_from_noise_matrix(const DriftMatrix& d, double omega,
                                                      double n_th) {
  const int ap = require_channel(d, Channel::APlus);
  const int apd = require_channel(d, Channel::APlusDag);
  const int am = require_channel(d, Channel::AMinus);
  const int amd = require_channel(d, Channel::AMinusDag);
  const auto w_plus = output_noise_matrix(d, omega, n_th);
  const auto w_minus = output_noise_matrix(d, -omega, n_th);
  CorrelatorTriple t;
  t.n_plus = w_minus(apd, ap).real() + 0.5;
  t.n_minus = w_plus(amd, am).real() + 0.5;
  t.xi = w_plus(ap, am);
  return t;
}

SpectralEvaluator::SpectralEvaluator(DriftMatrix d, double n_th)
    : drift_(std::move(d)), n_th_(n_th) {
  if (!(n_th_ >= 0.0) || !std::isfinite(n_th_)) {
    throw std::invalid_argument("n_th must be finite and non-negative");
  }
  const auto report = stability(drift_);
  if (!report.stable) {
    throw UnstableSystem(
        fmt::format("system is unstable: max real part of drift eigenvalues = {:.6g}",
                    report.max_real_part),
        report.max_real_part);
  }
  eigenvalues_ = drift_eigenvalues(drift_);

  const int n = drift_.dim();
  const int ap = require_channel(drift_, Channel::APlus);
  const int amd = require_channel(drift_, Channel::AMinusDag);

  // Operators reachable from a₊ or a₋† through nonzero couplings.
  std::vector<bool> in_block(n, false);
  std::vector<int> stack{ap, amd};
  in_block[ap] = in_block[amd] = true;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (!in_block[j] && (drift_.m(i, j) != 0.0 || drift_.m(j, i) != 0.0)) {
        in_block[j] = true;
        stack.push_back(j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (in_block[i]) block_.push_back(i);
  }

  const int b = static_cast<int>(block_.size());
  m_block_.resize(b, b);
  sqrt_decay_.resize(b);
  sym_occupation_.resize(b);
  normal_weight_.resize(b);
  mechanical_.resize(b);
  for (int r = 0; r < b; ++r) {
    const int i = block_[r];
    for (int c = 0; c < b; ++c) m_block_(r, c) = drift_.m(i, block_[c]);
    sqrt_decay_(r) = std::sqrt(drift_.decay(i));
    const Channel ch = drift_.ordering[i];
    const double occ = is_mechanical(ch) ? n_th_ : 0.0;
    sym_occupation_(r) = occ + 0.5;
    normal_weight_(r) = is_creator(ch) ? occ + 1.0 : occ;
    mechanical_[r] = is_mechanical(ch);
    if (i == ap) row_plus_ = r;
    if (i == amd) row_minus_dag_ = r;
  }
}

SpectralEvaluator::BlockSolve SpectralEvaluator::solve_block(double omega) const {
  const Eigen::Index b = m_block_.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(b, b);
  const Eigen::MatrixXcd a = m_block_ + kI * omega * id;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  if (!(lu.rcond() > kMinRcond)) {
    throw SingularMatrix(fmt::format("m + i*omega is singular at omega = {}", omega));
  }
  BlockSolve out;
  out.s = id + sqrt_decay_.asDiagonal() * lu.inverse() * sqrt_decay_.asDiagonal();

  // S⁻¹ = I - D^{1/2}(m + iω + D)⁻¹D^{1/2} and det S = det(m + iω + D)/det(m + iω)
  // are both free of cancellation, unlike inverting S directly.
  Eigen::MatrixXcd dual = a;
  dual.diagonal() += sqrt_decay_.cwiseAbs2().cast<std::complex<double>>();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_dual(dual);
  if (lu_dual.rcond() > kMinRcond) {
    out.dual_ok = true;
    out.det_s = lu_dual.determinant() / lu.determinant();
    out.s_inv = id - sqrt_decay_.asDiagonal() * lu_dual.inverse() * sqrt_decay_.asDiagonal();
  }
  return out;
}

CorrelatorTriple SpectralEvaluator::correlators(double omega) const {
  const BlockSolve sol = solve_block(omega);
  const int b = static_cast<int>(block_.size());
  CorrelatorTriple t;
  double n_plus = 0.0;
  double n_minus = 0.0;
  double occ_plus = 0.0;
  double occ_minus = 0.0;
  std::complex<double> xi = 0.0;
  for (int j = 0; j < b; ++j) {
    const auto u = sol.s(row_plus_, j);
    const auto v = sol.s(row_minus_dag_, j);
    n_plus += std::norm(u) * sym_occupation_(j);
    n_minus += std::norm(v) * sym_occupation_(j);
    // <x† x> weights; the a₋† row sees the adjoint channels, hence 2N - w.
    occ_plus += std::norm(u) * normal_weight_(j);
    occ_minus += std::norm(v) * (2.0 * sym_occupation_(j) - normal_weight_(j));
    xi += u * std::conj(v) * sym_occupation_(j);
  }
  t.n_plus = n_plus;
  t.n_minus = n_minus;
  t.occupation_plus = occ_plus;
  t.occupation_minus = occ_minus;
  t.xi = xi;

  if (sol.dual_ok) {
    // Cauchy-Binet over column pairs J, with each 2x2 minor of S taken from
    // the complementary minor of S⁻¹ (Jacobi): |det S[I,J]| =
    // |det S|·|det S⁻¹[Jᶜ, Iᶜ]|. Every term is non-negative.
    std::vector<int> rows_c;
    for (int r = 0; r < b; ++r) {
      if (r != row_plus_ && r != row_minus_dag_) rows_c.push_back(r);
    }
    const double det_s2 = std::norm(sol.det_s);
    double det = 0.0;
    for (int j1 = 0; j1 < b; ++j1) {
      for (int j2 = j1 + 1; j2 < b; ++j2) {
        std::vector<int> cols_c;
        for (int c = 0; c < b; ++c) {
          if (c != j1 && c != j2) cols_c.push_back(c);
        }
        const int k = static_cast<int>(cols_c.size());
        std::complex<double> minor = 1.0;
        if (k > 0) {
          Eigen::MatrixXcd sub(k, k);
          for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) sub(r, c) = sol.s_inv(cols_c[r], rows_c[c]);
          }
          minor = sub.determinant();
        }
        det += det_s2 * std::norm(minor) * sym_occupation_(j1) * sym_occupation_(j2);
      }
    }
    t.gram_det = det;
  }
  return t;
}

Eigen::MatrixXcd SpectralEvaluator::transfer_rows(double omega) const {
  const BlockSolve sol = solve_block(omega);
  Eigen::MatrixXcd rows(2, sol.s.cols());
  rows.row(0) = sol.s.row(row_plus_);
  rows.row(1) = sol.s.row(row_minus_dag_);
  return rows;
}

Eigen::Matrix2cd SpectralEvaluator::correlator_matrix(double omega) const {
  const auto t = correlators(omega);
  Eigen::Matrix2cd g;
  g << t.n_plus, t.xi, std::conj(t.xi), t.n_minus;
  return g;
}

SpectrumPoint SpectralEvaluator::spectrum(double omega) const {
  const BlockSolve sol = solve_block(omega);
  SpectrumPoint p;
  p.omega = omega;
  for (int j = 0; j < static_cast<int>(block_.size()); ++j) {
    const double part = std::norm(sol.s(row_plus_, j)) * normal_weight_(j);
    if (mechanical_[j]) {
      p.mechanical_part += part;
    } else {
      p.optical_part += part;
    }
  }
  p.total = p.optical_part + p.mechanical_part;
  return p;
}

CorrelatorTriple output_correlators(const DriftMatrix& d, double omega, double n_th) {
  return SpectralEvaluator(d, n_th).correlators(omega);
}

SpectrumPoint output_spectrum(const DriftMatrix& d, double omega, double n_th) {
  return SpectralEvaluator(d, n_th).spectrum(omega);
}

double pair_rate_numeric(const SpectralEvaluator& ev, double rel_tol) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be positive");
  const auto res = integrate_real_line([&](double w) { return ev.spectrum(w).total; },
                                       resonance_breakpoints(ev.eigenvalues()),
                                       QuadratureOptions{.rel_tol = 0.1 * rel_tol});
  const double value = res.value / (2.0 * std::numbers::pi);
  const double error = res.error / (2.0 * std::numbers::pi);
  if (error > rel_tol * std::abs(value) && error > 1e-300) {
    throw QuadratureError(
        fmt::format("pair rate quadrature did not converge: estimate {} with error {}", value,
                    error),
        error);
  }
  return value;
}

double pair_rate_numeric(const EffectiveModelParams& p, double rel_tol) {
  return pair_rate_numeric(SpectralEvaluator(drift_effective(p), 0.0), rel_tol);
}

}  // namespace entrate
