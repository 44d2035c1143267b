#pragma once

#include <string>
#include <vector>

namespace dop {

// One elementary check inside a criterion: exact comparison, with a short
// human-readable detail line (golden value, reported unit, timing notes).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  bool pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

// Run one acceptance criterion (1..10). Deterministic: all randomized suites
// use fixed seeds, so repeated runs produce identical results.
CriterionResult run_criterion(int id);

// All ten criteria in order.
std::vector<CriterionResult> run_all_criteria();

}  // namespace dop
