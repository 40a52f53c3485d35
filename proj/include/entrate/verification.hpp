#pragma once

// Acceptance checks: every closed-form oracle and physics invariant is
// re-derived numerically and compared against a pinned tolerance.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "entrate/langevin_models.hpp"

namespace entrate {

struct CheckResult {
  std::string id;     // "1" ... "10", with "9a" ... "9e"
  std::string title;
  bool passed = false;
  double measured = 0.0;   // worst deviation, or the tested statistic
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Builds the full-model drift; tests swap in a deliberately broken one.
  std::function<DriftMatrix(const FullModelParams&)> full_drift = drift_full;
  /// Check ids to run; empty runs all of them.
  std::vector<std::string> only;
};

const std::vector<std::string>& check_ids();

/// Runs one check; unknown ids throw std::invalid_argument. Exceptions
/// raised inside a check are reported as failures.
CheckResult run_check(const std::string& id, const VerifyOptions& opt = {});

std::vector<CheckResult> run_verification(const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

void write_report_text(const std::vector<CheckResult>& results, std::ostream& out);
void write_report_json(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace entrate
