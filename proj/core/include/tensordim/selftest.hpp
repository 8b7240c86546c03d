#ifndef TENSORDIM_SELFTEST_HPP
#define TENSORDIM_SELFTEST_HPP

#include <string>
#include <vector>

namespace tensordim::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  int checks = 0;        // individual assertions evaluated
  std::string detail;    // first failure, empty when passed
};

/// Runs the built-in fixture suite: the exact-identity criteria over the
/// formula engine, the profile builders, and the Groebner oracle
/// (criteria 1 through 9; the golden-file criterion lives with the
/// acceptance tests, which drive the installed CLI).
std::vector<CriterionResult> run_all();

/// One "criterion N (name): PASS/FAIL (k checks)" line per result.
std::string format_results(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace tensordim::selftest

#endif
