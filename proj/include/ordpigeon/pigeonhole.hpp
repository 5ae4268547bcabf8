#pragma once

// Topological pigeonhole numbers P^top(alpha_i)_{i in kappa}: the least beta
// such that every colouring of beta with kappa colours has, for some i, a
// colour-i subspace homeomorphic to alpha_i.

#include <string>
#include <variant>
#include <vector>

#include "ordpigeon/ordinal.hpp"

namespace ordpigeon {

struct Entry {
  Ordinal target;
  Cardinal multiplicity = Cardinal::finite(1);

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// A kappa-indexed target sequence, stored run-length encoded.
struct Instance {
  std::vector<Entry> entries;
};

/// All targets >= 2, all multiplicities >= 1, kappa = sum of multiplicities.
struct NormalizedInstance {
  std::vector<Entry> entries;
  Cardinal kappa;
};

struct Exists {
  Ordinal value;
  friend bool operator==(const Exists&, const Exists&) = default;
};

struct Infinite {
  friend bool operator==(const Infinite&, const Infinite&) = default;
};

struct Independent {
  Ordinal zfc_lower;
  std::string consistent_infinite;
  std::string consistent_equal_lower;
  std::string equiconsistency;
  friend bool operator==(const Independent&, const Independent&) = default;
};

using PigeonholeResult = std::variant<Exists, Infinite, Independent>;

enum class CasePath {
  C1,
  C2aI,
  C2aIIA,
  C2aIIB,
  C2aIIC_lt,
  C2aIIC_gt,
  C2bI,
  C2bII,
  C2cI,
  C2cII,
  C3,
  C4,
  C5,
  C6a,
  C6b,
  C6cI,
  C6cII,
  Zero,
  AllOnes,
};

const char* to_string(CasePath path);

/// Result of normalize: either a reduced instance or an immediate answer.
struct ShortCircuit {
  PigeonholeResult result;
  CasePath path;
};
using Normalization = std::variant<NormalizedInstance, ShortCircuit>;

/// Throws EmptyInstance when there are no entries or kappa = 0.  Entries with
/// multiplicity 0 contribute no indices and are skipped.
Normalization normalize(const Instance& inst);

CasePath classify_case(const NormalizedInstance& norm);

PigeonholeResult p_top(const Instance& inst);
PigeonholeResult p_top(const NormalizedInstance& norm);

enum class Verdict { Holds, Fails, IndependentUnknown };
const char* to_string(Verdict v);

/// Whether beta -> (top alpha_i)^1_{i in kappa}, as far as ZFC decides.
Verdict relation_holds(const Ordinal& beta, const Instance& inst);
Verdict relation_holds(const Ordinal& beta, const PigeonholeResult& result);

/// Least b with a <= w^b.  Throws ZeroInput.
Ordinal minimal_omega_power_bound(const Ordinal& a);

struct Case6Decomposition {
  Ordinal beta;
  std::uint64_t m = 0;
  /// a = w^beta * (m + 1) exactly.
  bool exact_multiple = false;
};

/// For countable a >= 2 that is not a power of w: either a = m with beta = 0,
/// or w^beta*m+1 <= a <= w^beta*(m+1) with beta > 0.  Throws
/// PowerOfOmegaInput for powers of w.
Case6Decomposition case6_decompose(const Ordinal& a);

/// Finite kappa, countable targets, at least one a power of w.
Ordinal p_top_case6_power(const NormalizedInstance& norm);

/// Finite kappa, countable targets, none a power of w, at least one infinite.
Ordinal p_top_case6_multiples(const NormalizedInstance& norm);

/// Human-readable dispatch trail for `case`.
struct CaseExplanation {
  CasePath path;
  std::vector<std::string> trail;
  PigeonholeResult result;
};
CaseExplanation explain_case(const Instance& inst);

}  // namespace ordpigeon
