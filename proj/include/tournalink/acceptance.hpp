#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tournalink {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  std::optional<double> limit_seconds;  // a criterion over its limit fails
};

/// Runs acceptance criteria 1..9 in order on a fresh classifier. Criteria
/// share the classifier, so each timing covers only the work that criterion
/// adds.
std::vector<CriterionResult> run_acceptance();

/// "[PASS] 3 larger tables (12.31 s, limit 60 s): ..."
std::string format_result(const CriterionResult& r);

}  // namespace tournalink
