#pragma once

// Counterexample colourings for beta below P^top, described by the
// Cantor-Bendixson rank of each point, with per-colour obstruction
// certificates that can be checked by ordinal arithmetic alone.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ordpigeon/ordinal.hpp"
#include "ordpigeon/pigeonhole.hpp"

namespace ordpigeon {

/// Half-open interval [lo, hi) of ordinals.
struct Interval {
  Ordinal lo;
  Ordinal hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};
using IntervalUnion = std::vector<Interval>;

/// Some (a_i) with a_i < bounds_i and a_0 # a_1 # ... = delta, or nullopt.
std::optional<std::vector<Ordinal>> natsum_expressible(const Ordinal& delta,
                                                       const std::vector<Ordinal>& bounds);

/// Splits [0, eta) into pieces where piece i has order type parts[i].  Each
/// CNF monomial of eta is handed out in block order to the parts, in list
/// order.  Throws PreconditionViolated unless the parts natural-sum to eta.
std::vector<IntervalUnion> natsum_split(const Ordinal& eta, const std::vector<Ordinal>& parts);

/// Order type of a union of disjoint intervals.
Ordinal order_type(const IntervalUnion& u);

enum class ColouringMode { Rank, Cofinality };

/// Rank mode: points 0 < x < domain with CB(x) < top_exponent are coloured by
/// the interval containing CB(x); the points w^top_exponent * l (l = 1, 2, ...)
/// by top_point_colours[l-1]; the point 0 by zero_colour.  Requires
/// domain < w^(top_exponent+1).
///
/// Cofinality mode: colour 1 iff cf(x) >= w_1, else colour 0.
struct RankColouring {
  ColouringMode mode = ColouringMode::Rank;
  Ordinal domain;
  Ordinal top_exponent;
  /// Instance target assigned to each colour.
  std::vector<Ordinal> colour_targets;
  std::vector<IntervalUnion> rank_classes;
  std::vector<std::size_t> top_point_colours;
  std::size_t zero_colour = 0;
};

struct DerivativeEmpty {
  Ordinal level;
  friend bool operator==(const DerivativeEmpty&, const DerivativeEmpty&) = default;
};
struct DerivativeSmall {
  Ordinal level;
  std::uint64_t bound = 0;
  friend bool operator==(const DerivativeSmall&, const DerivativeSmall&) = default;
};
struct DerivativeNotEmbeddable {
  Ordinal level;
  Ordinal class_residual;
  Ordinal target_residual;
  friend bool operator==(const DerivativeNotEmbeddable&, const DerivativeNotEmbeddable&) = default;
};
struct CofinalitySplit {
  friend bool operator==(const CofinalitySplit&, const CofinalitySplit&) = default;
};
using CertificateKind =
    std::variant<DerivativeEmpty, DerivativeSmall, DerivativeNotEmbeddable, CofinalitySplit>;

struct ObstructionCertificate {
  std::size_t colour = 0;
  CertificateKind kind;
  Ordinal claimed_target;
  friend bool operator==(const ObstructionCertificate&, const ObstructionCertificate&) = default;
};

struct Witness {
  RankColouring colouring;
  std::vector<ObstructionCertificate> certificates;
};

/// A beta just below p: the largest failing beta when p = w^g*m+1 or
/// p = w^g*(m+1) with m >= 1 (n-1 for finite p = n), and w^e*2+1 for some
/// e < h when p = w^h is a power of w.  Throws ZeroInput for 0.
Ordinal failing_beta(const Ordinal& p);

/// Throws NotBelowThreshold when beta -> (top alpha_i) holds, OutOfScope
/// outside case 1 and the finite-kappa countable cases.
Witness build_counterexample(const Ordinal& beta, const NormalizedInstance& norm);

/// Throws OutOfDomain when x >= col.domain.
std::size_t eval_colouring(const RankColouring& col, const Ordinal& x);

bool verify_certificates(const RankColouring& col, const NormalizedInstance& norm,
                         const std::vector<ObstructionCertificate>& certs);

}  // namespace ordpigeon
