#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ncnull::selftest {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget = 0.0;
};

/// A check fills `detail` and returns its verdict. Exceptions count as failure.
struct Criterion {
  int id = 0;
  std::string title;
  double budget = 0.0;  ///< seconds; exceeding it fails the criterion
  std::function<bool(std::string&)> check;
};

const std::vector<Criterion>& criteria();

CriterionResult run_criterion(const Criterion& c);

/// Runs the listed criteria (all when empty), calling `report` after each.
std::vector<CriterionResult> run_all(const std::vector<int>& only = {},
                                     const std::function<void(const CriterionResult&)>& report = {});

/// "[PASS] 3 title (1.23 s / 10 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace ncnull::selftest
