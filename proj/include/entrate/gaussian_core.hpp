#pragma once

// Gaussian-state covariance conventions.
//
// Vacuum normalization is 1/2: the vacuum covariance matrix is I/2 and every
// symplectic eigenvalue of a physical state is >= 1/2. Quadratures are ordered
// (x1, p1, x2, p2, ...); the partial transpose flips the sign of the p
// quadrature of every mode assigned to beam 2. Logarithms are natural.

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace entrate {

/// Accepted slack below 1/2 for symplectic eigenvalues of physical states.
inline constexpr double kPhysicalityTolerance = 1e-9;

enum class Beam { One, Two };

/// Symmetrized two-mode correlators at a frequency pair (ω, -ω).
///
/// n_plus = <A1† A1> + 1/2, n_minus = <A2† A2> + 1/2, xi = <A1 A2>.
/// When the producer can compute the Gram determinant n₊n₋ - |ξ|² more
/// accurately than the rounded fields allow (strongly squeezed outputs lose
/// almost all of it to cancellation), it stores it in `gram_det`. Likewise
/// the normally ordered occupations <A1† A1> and <A2† A2> can be supplied
/// directly when they are far below 1/2 and would be rounded away in n₊, n₋.
struct CorrelatorTriple {
  double n_plus = 0.5;
  double n_minus = 0.5;
  std::complex<double> xi{0.0, 0.0};
  std::optional<double> gram_det;
  std::optional<double> occupation_plus;
  std::optional<double> occupation_minus;
};

/// n₊n₋ - |ξ|², taken from `gram_det` when present, otherwise evaluated from
/// the fields with compensated products.
double gram_determinant(const CorrelatorTriple& t);

/// Smaller eigenvalue η₋ of [[n₊, ξ], [ξ*, n₋]]; equals the smaller
/// symplectic eigenvalue of the partially transposed covariance matrix.
double eta_minus(const CorrelatorTriple& t);

/// 1 - 2η₋: positive exactly when the two modes are entangled. Accurate both
/// for strongly squeezed states and for weakly populated ones.
double separability_margin(const CorrelatorTriple& t);

/// Real symmetric covariance matrix plus the beam each mode belongs to.
class CovarianceMatrix {
 public:
  CovarianceMatrix(Eigen::MatrixXd entries, std::vector<Beam> mode_partition);

  int dim() const { return static_cast<int>(entries_.rows()); }
  int modes() const { return dim() / 2; }
  const Eigen::MatrixXd& entries() const { return entries_; }
  const std::vector<Beam>& mode_partition() const { return partition_; }

 private:
  Eigen::MatrixXd entries_;
  std::vector<Beam> partition_;
};

/// Block-diagonal J with 2x2 blocks [[0, 1], [-1, 0]].
struct SymplecticForm {
  int dim;
  Eigen::MatrixXd matrix() const;
};

CovarianceMatrix covariance_from_correlators(const CorrelatorTriple& t);

/// E = max(0, -ln(2η₋)) for a two-mode state with no intra-beam squeezing.
double log_negativity_two_mode(const CorrelatorTriple& t);

/// Symplectic eigenvalues, ascending, dim/2 entries.
std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& v);
inline std::vector<double> symplectic_spectrum(const CovarianceMatrix& v) {
  return symplectic_spectrum(v.entries());
}

/// Symplectic eigenvalues {ν₋, ν₊} of the covariance built from a triple,
/// ν± = (sqrt((n₊ - n₋)² + 4 det) ± |n₊ - n₋|)/2, with the smaller one taken
/// from the Gram determinant so that it stays accurate for strongly squeezed
/// states where a numerical eigensolver cannot resolve it.
std::vector<double> symplectic_spectrum(const CorrelatorTriple& t);

/// Sign-flips the p quadratures of beam-2 modes.
Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& v,
                                  const std::vector<Beam>& partition);

double log_negativity_general(const Eigen::MatrixXd& v,
                              const std::vector<Beam>& partition);
inline double log_negativity_general(const CovarianceMatrix& v) {
  return log_negativity_general(v.entries(), v.mode_partition());
}

}  // namespace entrate
