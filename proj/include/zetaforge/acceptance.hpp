#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zetaforge {

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  long long elapsed_ms = 0;
  long long budget_ms = 0;  // 0 = covered by the total budget only
};

struct AcceptanceSummary {
  std::vector<CriterionOutcome> criteria;
  long long total_ms = 0;
  long long total_budget_ms = 60000;
  bool all_pass = false;
};

AcceptanceSummary run_acceptance();

// One PASS/FAIL line per criterion plus the TOTAL line.
void print_acceptance(const AcceptanceSummary& summary, std::ostream& os);

}  // namespace zetaforge
