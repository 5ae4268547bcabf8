#pragma once

// Seeded random generators for ordinals and instances, shared by the
// property suites, the acceptance runner and the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "ordpigeon/ordinal.hpp"
#include "ordpigeon/pigeonhole.hpp"

namespace ordpigeon {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool chance(double p);

  /// Countable CNF term: at most `max_terms` monomials with coefficients in
  /// [1, max_coefficient]; exponents nest up to `depth` levels.
  Ordinal countable(int depth = 2, std::size_t max_terms = 3, std::uint64_t max_coefficient = 3);
  /// Positive countable term.
  Ordinal positive(int depth = 2, std::size_t max_terms = 3, std::uint64_t max_coefficient = 3);
  /// Like countable(), but exponents may involve w_1 and w_2.
  Ordinal with_atoms(int depth = 2, std::size_t max_terms = 3, std::uint64_t max_coefficient = 3);
  /// Positive term whose exponents are w*p+q with p, q <= 2.
  Ordinal with_small_exponents(std::size_t max_terms = 3,
                               std::uint64_t max_coefficient = 3);

  /// Mix of countable targets, w_1, w_1+1, w_2, ... with finite and infinite
  /// multiplicities (always at least one index).
  Instance instance(std::size_t max_entries = 4);
  /// One target >= w_1+1 with multiplicity 1, the rest finite or w.
  Instance lopsided_instance(std::size_t max_entries = 4);
  /// Countable targets >= 2 with finite multiplicities.
  Instance countable_instance(std::size_t max_entries = 3, int depth = 1);

 private:
  std::vector<Ordinal> exponents(int depth, std::size_t max_terms, bool atoms);
  Ordinal assemble(std::vector<Ordinal> exps, std::uint64_t max_coefficient);

  std::mt19937_64 rng_;
};

}  // namespace ordpigeon
