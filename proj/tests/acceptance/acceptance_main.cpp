// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>

#include "grptopo/verify.hpp"

int main() {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  auto criteria = grptopo::acceptance_criteria();
  int passed = 0;
  for (const auto& c : criteria) {
    std::printf("[%s] %s — %s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(), c.detail.c_str());
    std::fflush(stdout);
    if (c.pass) ++passed;
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("acceptance: %d/%zu criteria passed in %.1fs\n", passed, criteria.size(),
              elapsed);
  return passed == int(criteria.size()) ? 0 : 1;
}
