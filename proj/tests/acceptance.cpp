// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
#include <cstdio>
#include <numeric>

#include "nahilb/acceptance.hpp"

int main() {
  std::vector<int> ids(nahilb::acceptance::kCriterionCount);
  std::iota(ids.begin(), ids.end(), 1);
  int failures = 0;
  for (int id : ids) {
    const auto r = nahilb::acceptance::run_criterion(id);
    failures += !r.passed;
    std::printf("%s AC%-2d %s: %s [%.2fs]\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(ids.size()) - failures, ids.size());
  return failures == 0 ? 0 : 1;
}
