#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dkp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst measured value
  double threshold = 0.0;  // pinned acceptance threshold
  std::string detail;
};

// Run the acceptance suite at desk scale (N = 256, L = 12). `filter` is a
// comma-separated list of criterion ids ("1,3,7"); empty runs everything.
// `progress`, when supplied, receives one line per finished criterion.
std::vector<CriterionResult> run_selftest(
    const std::string& filter = "",
    const std::function<void(const CriterionResult&)>& progress = nullptr);

std::string format_criterion_line(const CriterionResult& r);

}  // namespace dkp
