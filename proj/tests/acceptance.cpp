// Acceptance harness: runs every criterion at its full stated range and
// prints one pass/fail line per criterion.
#include <cstdio>

#include "catalania/verify.hpp"

int main() {
  const catalania::VerifyReport report = catalania::run_suites({"all"});
  std::fputs(report.str().c_str(), stdout);
  std::printf("%zu criteria, %s\n", report.checks.size(),
              report.all_pass() ? "all pass" : "FAILURES PRESENT");
  return report.all_pass() ? 0 : 1;
}
