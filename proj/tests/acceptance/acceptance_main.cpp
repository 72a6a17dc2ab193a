// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <iostream>

#include "cubicsym/catalog/golden.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int failed = 0;
  for (const auto& c : cubicsym::golden_checks()) {
    std::cout << "criterion " << c.criterion << ' ' << (c.passed ? "PASS" : "FAIL") << " [" << c.title
              << "] " << c.detail << std::endl;
    failed += !c.passed;
  }
  const auto s = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << "(" << failed << " failing, " << s << " ms)\n";
  return failed ? 1 : 0;
}
