#pragma once

#include <functional>
#include <string>
#include <vector>

namespace torcov {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failed sub-checks, empty on success
  double seconds = 0;
};

// Runs every acceptance criterion in order; on_result (if set) is called as
// soon as each one finishes.
std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace torcov
