// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <iostream>

#include "genuskit/acceptance.hpp"

int main() {
  namespace acc = genuskit::acceptance;
  bool all = true;
  for (const auto& result : acc::run_all()) {
    acc::print(std::cout, result);
    all = all && result.passed;
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << '\n';
  return all ? 0 : 1;
}
