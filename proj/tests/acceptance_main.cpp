// One line per acceptance criterion; nonzero exit if any fails.
#include <iostream>

#include "tournalink/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : tournalink::run_acceptance()) {
    std::cout << tournalink::format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
