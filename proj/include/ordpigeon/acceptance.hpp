#pragma once

// The acceptance grids, runnable from the test binary and `ordpigeon selftest`.

#include <functional>
#include <string>
#include <vector>

#include "ordpigeon/properties.hpp"

namespace ordpigeon {

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceOptions {
  /// Criteria to run; empty runs all of 1..9.
  std::vector<int> only;
  PropertyOptions properties;
};

/// Runs the criteria in order, calling `report` after each one.
std::vector<CriterionOutcome> run_acceptance(
    const AcceptanceOptions& opts = {},
    const std::function<void(const CriterionOutcome&)>& report = {});

/// "PASS  3  self-arrow exactly at w^w^b: 372 ordinals  (0.41 s, budget 10 s)"
std::string format_outcome(const CriterionOutcome& o);

}  // namespace ordpigeon
