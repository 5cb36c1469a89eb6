// Acceptance suite runner: one pass/fail line per criterion, exit 0 only if
// all criteria hold.
#include "alcovelab/fixtures.hpp"

#include <iostream>

int main() {
  auto results = alcovelab::run_acceptance(std::cout);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  std::cout << (all ? "acceptance: all criteria passed"
                    : "acceptance: FAILURES present")
            << "\n";
  return all ? 0 : 1;
}
