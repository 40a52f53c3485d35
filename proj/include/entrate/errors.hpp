#pragma once

#include <stdexcept>
#include <string>

namespace entrate {

/// Raised when a linear system is dynamically unstable (some drift eigenvalue
/// has a positive real part), so no stationary state exists.
class UnstableSystem : public std::runtime_error {
 public:
  UnstableSystem(const std::string& what, double max_real_part)
      : std::runtime_error(what), max_real_part_(max_real_part) {}
  double max_real_part() const noexcept { return max_real_part_; }

 private:
  double max_real_part_;
};

/// (m + iω) is not invertible at the requested frequency.
class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A covariance matrix or correlator triple violates the uncertainty bound.
class UnphysicalState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace entrate
