#ifndef AIRYDET_VERIFY_HPP
#define AIRYDET_VERIFY_HPP

#include <string>
#include <vector>

namespace airydet {

struct CheckResult {
  std::string name;
  std::string suite;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  double runtime_s = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// Suites: identities | props | determinants | endpoints | tails | all.
VerifyReport run_verify(const std::string& suite);

std::string report_to_json(const VerifyReport& report);

}  // namespace airydet

#endif
