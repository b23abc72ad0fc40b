#pragma once
#include <string>
#include <vector>

namespace wskg {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs acceptance criterion `only` (1..11), or all of them when only == 0.
// Never throws; failures (including unexpected exceptions) are reported in
// the results.
std::vector<CriterionResult> run_acceptance(int only = 0);

}  // namespace wskg
