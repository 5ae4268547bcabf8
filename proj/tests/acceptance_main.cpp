#include <iostream>

#include "ordpigeon/acceptance.hpp"

int main() {
  bool all = true;
  ordpigeon::run_acceptance({}, [&](const ordpigeon::CriterionOutcome& o) {
    std::cout << ordpigeon::format_outcome(o) << std::endl;
    all = all && o.passed;
  });
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
  return all ? 0 : 1;
}
