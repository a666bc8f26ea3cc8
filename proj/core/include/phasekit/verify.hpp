#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "phasekit/fock.hpp"

namespace phasekit {

struct RunConfig {
  TruncationConfig truncation{256, 4};
  int quad = 2048;
  std::map<std::string, double> tolerance_overrides;
};

struct CheckResult {
  std::string check_id;
  std::string identity;  // relation under test, in formula shorthand
  double measured;       // deviation actually observed
  double tolerance;
  bool pass;
};

// Runs the whole identity battery at the configured sizes. Checks that
// cannot run (e.g. a state does not fit the basis) fail with a
// non-finite measured value instead of aborting the suite.
std::vector<CheckResult> run_verify_suite(const RunConfig& config);

bool all_pass(const std::vector<CheckResult>& results);

// Deterministic emission: fixed row order, 17 significant digits.
void write_checks_csv(std::ostream& out, const std::vector<CheckResult>& results);
void write_checks_json(std::ostream& out, const std::vector<CheckResult>& results);

// %.17g as a std::string (shared float formatting for all reports).
std::string format_g17(double v);

}  // namespace phasekit
