#pragma once

// Cantor normal form ordinals extended with initial-ordinal atoms.
//
// An Ordinal is a finite descending sum  w^e1*c1 + ... + w^en*cn  where each
// exponent is either an ordinal or an atom L_v standing for the initial
// ordinal w_v (v >= 1).  Because w^{w_v} = w_v for v >= 1, the ordinal w_v is
// stored as the single term (L_v, 1) and an exponent equal to w_v is stored as
// the bare atom, so structural equality coincides with ordinal equality.
//
// Values are immutable; exponents share their payload through
// shared_ptr<const Ordinal>.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordpigeon/error.hpp"

namespace ordpigeon {

class Ordinal;

class Exponent {
 public:
  /// The exponent 0.
  Exponent() = default;

  /// Exponent with ordinal value `value`; collapses w_v to the atom L_v.
  static Exponent of(const Ordinal& value);
  static Exponent finite(std::uint64_t n);
  /// The atom L_v, i.e. the initial ordinal w_v.  Requires v >= 1.
  static Exponent aleph(const Ordinal& index);

  bool is_aleph() const noexcept { return kind_ == Kind::Aleph; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_zero() const noexcept { return kind_ == Kind::Finite && finite_ == 0; }

  /// Index v of an atom L_v.  Precondition: is_aleph().
  const Ordinal& aleph_index() const;
  /// Finite value.  Precondition: is_finite().
  std::uint64_t finite_value() const noexcept { return finite_; }

  /// The ordinal this exponent denotes (atoms expanded to w_v).
  Ordinal value() const;

  friend bool operator==(const Exponent& a, const Exponent& b);
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  enum class Kind : std::uint8_t { Finite, Plain, Aleph };

  Kind kind_ = Kind::Finite;
  std::uint64_t finite_ = 0;
  // Plain: the exponent value (infinite, not of the form w_v).  Aleph: v.
  std::shared_ptr<const Ordinal> payload_;
};

struct Term {
  Exponent exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

class Ordinal {
 public:
  /// Zero.
  Ordinal() = default;
  explicit Ordinal(std::uint64_t n);

  /// Validates the normal-form invariants (strictly descending exponents,
  /// positive coefficients) and applies the collapse rule.
  static Ordinal from_terms(std::vector<Term> terms);
  static Ordinal omega() { return from_terms({Term{Exponent::finite(1), 1}}); }
  /// Initial ordinal w_v (w_0 = w).
  static Ordinal initial(const Ordinal& index);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  bool is_successor() const noexcept;
  bool is_limit() const noexcept { return !is_zero() && !is_successor(); }
  /// True when no initial-ordinal atom occurs anywhere in the term.
  bool is_countable() const noexcept;

  /// Value of a finite ordinal.  Precondition: is_finite().
  std::uint64_t finite_value() const noexcept;

  /// Exponent of the leading / last term.  Precondition: !is_zero().
  const Exponent& leading_exponent() const noexcept { return terms_.front().exponent; }
  const Exponent& last_exponent() const noexcept { return terms_.back().exponent; }
  std::uint64_t leading_coefficient() const noexcept { return terms_.front().coefficient; }

  friend bool operator==(const Ordinal& a, const Ordinal& b) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

/// w^e as a single term (collapse rule applied).
Ordinal omega_pow(const Exponent& e);
Ordinal omega_pow(const Ordinal& e);

/// The unique d with a + d = b.  Throws Underflow when a > b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

/// Hessenberg natural sum: coefficientwise addition over merged exponents.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);
Ordinal natural_sum(std::span<const Ordinal> parts);
/// a # a # ... # a (n times).
Ordinal natural_multiple(const Ordinal& a, std::uint64_t n);

/// Last CNF exponent as an ordinal; 0 for 0.
Ordinal cb_rank(const Ordinal& x);

/// 0, 1, w, or a regular initial ordinal.
Ordinal cofinality(const Ordinal& a);

bool is_power_of_omega(const Ordinal& a);

struct LeadingDecomposition {
  Ordinal exponent;          // gamma
  std::uint64_t multiple;    // m
  Ordinal remainder;         // delta < w^gamma
};

/// a = w^gamma * m + delta with delta < w^gamma.  Throws ZeroInput for 0.
LeadingDecomposition leading_decomposition(const Ordinal& a);

/// Representative of the biembeddability class of `a`.
Ordinal biembed_canonical(const Ordinal& a);

bool is_order_reinforcing(const Ordinal& a);

/// Milner-Rado sum of a nonempty list of positive ordinals.
Ordinal mr_sum(std::span<const Ordinal> targets);

/// Milner-Rado sum where entry i occurs `weight` times (weights >= 1).
struct WeightedOrdinal {
  Ordinal value;
  std::uint64_t weight = 1;
};
Ordinal mr_sum(std::span<const WeightedOrdinal> targets);

/// Non-topological pigeonhole number; equal to mr_sum.
Ordinal p_ord(std::span<const Ordinal> targets);

/// Splits x = w^a * q + r with r < w^a.
struct OmegaPowerDivision {
  Ordinal quotient;
  Ordinal remainder;
};
OmegaPowerDivision divide_by_omega_power(const Ordinal& x, const Ordinal& a);

/// Order type of the a-th Cantor-Bendixson derivative of the space x,
/// i.e. of {y < x : CB(y) >= a} (for a > 0 the point 0 is excluded).
Ordinal derived_order_type(const Ordinal& x, const Ordinal& a);

class Cardinal {
 public:
  static Cardinal finite(std::uint64_t n);
  static Cardinal aleph(const Ordinal& index);

  bool is_finite() const noexcept { return !aleph_index_.has_value(); }
  std::uint64_t count() const noexcept { return count_; }
  /// Precondition: !is_finite().
  const Ordinal& aleph_index() const { return *aleph_index_; }

  friend bool operator==(const Cardinal&, const Cardinal&) = default;
  friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b);

 private:
  std::uint64_t count_ = 0;
  std::optional<Ordinal> aleph_index_;
};

Cardinal card_successor(const Cardinal& c);
/// Initial ordinal of a cardinal: n, w, w_1, ...
Ordinal ord_of_card(const Cardinal& c);
/// Cardinal sum.
Cardinal card_add(const Cardinal& a, const Cardinal& b);

/// ASCII rendering (see notation.hpp); handy for test diagnostics.
std::ostream& operator<<(std::ostream& os, const Ordinal& a);
std::ostream& operator<<(std::ostream& os, const Cardinal& c);

}  // namespace ordpigeon
