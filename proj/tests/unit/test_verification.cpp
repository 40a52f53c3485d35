#include <doctest.h>

#include <sstream>

#include "entrate/verification.hpp"

using namespace entrate;

TEST_CASE("resonant cross-check passes on the correct model") {
  const CheckResult r = run_check("1");
  CHECK(r.passed);
  CHECK(r.measured <= r.tolerance);
  CHECK(r.seconds >= 0.0);
}

TEST_CASE("an injected sign error in the full model fails the resonant cross-check") {
  VerifyOptions opt;
  opt.full_drift = [](const FullModelParams& p) {
    DriftMatrix d = drift_full(p);
    // flip the mechanical feedback onto one optical quadrature
    d.m(4, 3) *= -1.0;
    return d;
  };
  const CheckResult r = run_check("1", opt);
  CHECK_FALSE(r.passed);
  CHECK(r.measured > r.tolerance);
}

TEST_CASE("reports carry timing and parse as JSON") {
  VerifyOptions opt;
  opt.only = {"2", "3"};
  const auto results = run_verification(opt);
  REQUIRE(results.size() == 2);
  std::ostringstream text, json;
  write_report_text(results, text);
  write_report_json(results, json);
  CHECK(text.str().find("CRITERION 2") != std::string::npos);
  CHECK(text.str().find("time=") != std::string::npos);
  CHECK(json.str().find("\"seconds\"") != std::string::npos);
  CHECK(all_passed(results));
}

TEST_CASE("unknown check ids are rejected") {
  CHECK_THROWS_AS(run_check("42"), std::invalid_argument);
}
