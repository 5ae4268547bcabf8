#pragma once

// Randomized property suites for each module.  Each property runs a fixed
// number of seeded cases and records the first counterexample it meets.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ordpigeon {

struct PropertyOutcome {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  /// Runs over a complete finite grid instead of random samples.
  bool exhaustive = false;

  bool passed() const { return failures == 0; }
};

struct PropertyOptions {
  std::uint64_t seed = 20240611;
  /// Cases per algebra law and per case-tree property.
  std::size_t cases = 10000;
  /// Cases for the witness and cross-module properties.
  std::size_t heavy_cases = 10000;
};

std::vector<PropertyOutcome> ordinal_properties(const PropertyOptions& opts = {});
std::vector<PropertyOutcome> engine_properties(const PropertyOptions& opts = {});
std::vector<PropertyOutcome> witness_properties(const PropertyOptions& opts = {});
std::vector<PropertyOutcome> oracle_properties(const PropertyOptions& opts = {});
std::vector<PropertyOutcome> notation_properties(const PropertyOptions& opts = {});

std::vector<PropertyOutcome> all_properties(const PropertyOptions& opts = {});

}  // namespace ordpigeon
