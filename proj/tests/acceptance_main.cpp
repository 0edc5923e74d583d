#include <cstdio>

#include "torcov/acceptance.hpp"

int main() {
  int failed = 0;
  torcov::run_acceptance([&](const torcov::CheckResult& r) {
    std::printf("%s  %s  (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  return failed == 0 ? 0 : 1;
}
