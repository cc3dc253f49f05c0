// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iostream>

#include "iwahori/verify.hpp"

int main() {
  using Clock = std::chrono::steady_clock;
  int failed = 0;
  for (const auto& c : iwahori::verify::acceptance_criteria()) {
    const auto start = Clock::now();
    const iwahori::verify::CheckResult r = c.run();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << "criterion " << c.number << " " << (r.passed ? "PASS" : "FAIL") << " " << c.name
              << " (checked " << r.checked << ", " << seconds << " s)\n";
    for (const auto& f : r.failures)
      std::cout << "    " << f << '\n';
    if (!r.passed) {
      std::cout << "    " << r.failure_count << " failures\n";
      ++failed;
    }
    std::cout.flush();
  }
  std::cout << (failed ? "acceptance FAILED" : "acceptance passed") << " (" << 9 - failed
            << "/9)\n";
  return failed ? 1 : 0;
}
