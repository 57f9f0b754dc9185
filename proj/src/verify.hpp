#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace md {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ran = false;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  bool deep = false;       // include the long strict-balance checks
  bool only_deep = false;  // run just the deep parts
  int jobs = 1;
  std::optional<int> only_criterion;
};

// Runs the acceptance checks, printing one pass/fail line per criterion.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, std::ostream& os);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace md
