#pragma once

#include <string>
#include <vector>

namespace supergrading {

struct SelftestOptions {
  // Largest m+n for the gl centralizer scan. The oracle scan uses one less and
  // the osp scan uses m+2n <= max_size + 3.
  int max_size = 6;
};

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  double seconds;
  double time_limit;
  std::string detail;
};

CriterionResult run_criterion(int id, const SelftestOptions& options = {});
std::vector<CriterionResult> run_acceptance(const SelftestOptions& options = {});
// "criterion 3 PASS  gl centralizer dimensions  (1.20 s)  ..."
std::string format_result(const CriterionResult& r);

}  // namespace supergrading
