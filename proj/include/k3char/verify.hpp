#pragma once

#include <string>
#include <vector>

namespace k3char {

enum class CheckStatus { Pass, Fail, Discrepancy };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  int order = 8;   // truncation depth for the t-series checks
  int qorder = 24; // truncation depth for the q-series checks
  int seeds = 50;  // randomized tie-breaking trials
};

const std::vector<std::string>& verify_suites();

// Runs one of the named invariant suites (or "all") and returns the report.
// "Discrepancy" marks a confirmed mismatch against the published reference
// values that the internal checksums rule in our favor; it does not fail
// the run.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace k3char
