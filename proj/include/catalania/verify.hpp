#pragma once

#include <string>
#include <vector>

namespace catalania {

struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string witness;  // set whenever the check fails
  double ms = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string str() const;  // one line per check
};

// Suites: counts, classes, links, sgraphs, classify, hypercube,
// degeneration, uniqueness, fixtures, all.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// max_t <= 0 runs each criterion at its full stated range; smaller values
// shrink the sweeps.  Suites run in a thread pool; the report is assembled
// in order.
VerifyReport run_suites(const std::vector<std::string>& suites, int max_t = 0,
                        bool parallel = true);

}  // namespace catalania
