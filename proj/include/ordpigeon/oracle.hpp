#pragma once

// Brute-force oracles for desk-scale validation of the closed formulas.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordpigeon/ordinal.hpp"
#include "ordpigeon/pigeonhole.hpp"

namespace ordpigeon {

/// Exhaustive: does every colouring of beta points with |targets| colours
/// give some colour i at least targets[i] points?  Throws TooLarge when more
/// than 3e7 colourings would have to be considered.
bool finite_arrow_check(std::uint64_t beta, const std::vector<std::uint64_t>& targets);

struct EnumerationBounds {
  /// Exponents range over the ordinals <= max_exponent enumerated under the
  /// same coefficient and monomial bounds.
  Ordinal max_exponent;
  std::uint64_t max_coefficient = 1;
  std::size_t max_monomials = 1;
};

/// All countable CNF terms within the bounds, ascending, including 0.
std::vector<Ordinal> enumerate_ordinals_below(const EnumerationBounds& bounds);

/// Checks that `candidate` is not a natural sum of parts below the bounds
/// while a structured sample of smaller ordinals is.
bool mr_sum_bruteforce_check(const std::vector<Ordinal>& bounds, const Ordinal& candidate,
                             std::size_t sample_count);

struct CrossCheckMismatch {
  Instance instance;
  Ordinal expected;
  PigeonholeResult actual;
};

struct CrossCheckReport {
  std::vector<CrossCheckMismatch> mismatches;
  std::size_t checked = 0;
  /// Instances outside every sub-family hypothesis.
  std::size_t skipped = 0;
};

/// Independent sub-family formula (successors of powers, powers, powers mixed
/// with successors, simple multiples), or nullopt outside those families.
std::optional<Ordinal> subfamily_formula(const Instance& inst);

CrossCheckReport cross_check_p_top(const std::vector<Instance>& grid);

}  // namespace ordpigeon
