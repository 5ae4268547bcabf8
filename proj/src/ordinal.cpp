#include "ordpigeon/ordinal.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace ordpigeon {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(ErrorKind::UnrepresentableInput, "coefficient overflow");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error(ErrorKind::UnrepresentableInput, "coefficient overflow");
  }
  return a * b;
}

}  // namespace

// ---------------------------------------------------------------- Exponent

Exponent Exponent::finite(std::uint64_t n) {
  Exponent e;
  e.finite_ = n;
  return e;
}

Exponent Exponent::aleph(const Ordinal& index) {
  if (index.is_zero()) {
    throw Error(ErrorKind::PreconditionViolated, "aleph atom index must be positive");
  }
  Exponent e;
  e.kind_ = Kind::Aleph;
  e.payload_ = std::make_shared<const Ordinal>(index);
  return e;
}

Exponent Exponent::of(const Ordinal& value) {
  if (value.is_finite()) return finite(value.finite_value());
  auto terms = value.terms();
  if (terms.size() == 1 && terms[0].coefficient == 1 && terms[0].exponent.is_aleph()) {
    return terms[0].exponent;
  }
  Exponent e;
  e.kind_ = Kind::Plain;
  e.payload_ = std::make_shared<const Ordinal>(value);
  return e;
}

const Ordinal& Exponent::aleph_index() const {
  assert(kind_ == Kind::Aleph);
  return *payload_;
}

Ordinal Exponent::value() const {
  switch (kind_) {
    case Kind::Finite:
      return Ordinal(finite_);
    case Kind::Plain:
      return *payload_;
    case Kind::Aleph:
      return Ordinal::from_terms({Term{*this, 1}});
  }
  return Ordinal();
}

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Exponent::Kind::Finite) return a.finite_ == b.finite_;
  return a.payload_ == b.payload_ || *a.payload_ == *b.payload_;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  using K = Exponent::Kind;
  if (a.kind_ == K::Finite && b.kind_ == K::Finite) return a.finite_ <=> b.finite_;
  if (a.kind_ == K::Finite) return std::strong_ordering::less;
  if (b.kind_ == K::Finite) return std::strong_ordering::greater;
  if (a.kind_ == K::Plain && b.kind_ == K::Plain) return *a.payload_ <=> *b.payload_;
  if (a.kind_ == K::Aleph && b.kind_ == K::Aleph) return *a.payload_ <=> *b.payload_;
  // One plain v against an atom L: v < w_nu iff lead(v) < L; v never equals w_nu.
  if (a.kind_ == K::Plain) {
    return a.payload_->leading_exponent() < b ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
  }
  return b.payload_->leading_exponent() < a ? std::strong_ordering::greater
                                            : std::strong_ordering::less;
}

// ----------------------------------------------------------------- Ordinal

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(Term{Exponent(), n});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) {
      throw Error(ErrorKind::PreconditionViolated, "zero coefficient in normal form");
    }
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw Error(ErrorKind::PreconditionViolated, "exponents not strictly descending");
    }
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

Ordinal Ordinal::initial(const Ordinal& index) {
  if (index.is_zero()) return omega();
  return from_terms({Term{Exponent::aleph(index), 1}});
}

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_countable() const noexcept {
  for (const Term& t : terms_) {
    if (t.exponent.is_aleph()) return false;
    if (!t.exponent.is_finite() && !t.exponent.value().is_countable()) return false;
  }
  return true;
}

std::uint64_t Ordinal::finite_value() const noexcept {
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

// -------------------------------------------------------------- arithmetic

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Exponent& lead = b.leading_exponent();
  std::vector<Term> out;
  for (const Term& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      if (t.exponent == lead) out.push_back(t);
      break;
    }
  }
  auto bt = b.terms();
  if (!out.empty() && out.back().exponent == lead) {
    out.back().coefficient = checked_add(out.back().coefficient, bt[0].coefficient);
  } else {
    out.push_back(bt[0]);
  }
  out.insert(out.end(), bt.begin() + 1, bt.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal lead = a.leading_exponent().value();
  std::vector<Term> out;
  for (const Term& t : b.terms()) {
    if (t.exponent.is_zero()) {
      // a * c: scale the leading coefficient, keep the tail.
      auto at = a.terms();
      out.push_back(Term{at[0].exponent, checked_mul(at[0].coefficient, t.coefficient)});
      out.insert(out.end(), at.begin() + 1, at.end());
    } else {
      out.push_back(Term{Exponent::of(add(lead, t.exponent.value())), t.coefficient});
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal omega_pow(const Exponent& e) { return Ordinal::from_terms({Term{e, 1}}); }

Ordinal omega_pow(const Ordinal& e) { return omega_pow(Exponent::of(e)); }

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (a > b) throw Error(ErrorKind::Underflow, "left_subtract: a > b");
  auto at = a.terms();
  auto bt = b.terms();
  std::size_t i = 0;
  while (i < at.size() && at[i] == bt[i]) ++i;
  if (i == at.size()) return Ordinal::from_terms({bt.begin() + i, bt.end()});
  std::vector<Term> out;
  if (bt[i].exponent > at[i].exponent) {
    out.assign(bt.begin() + i, bt.end());
  } else {
    out.push_back(Term{bt[i].exponent, bt[i].coefficient - at[i].coefficient});
    out.insert(out.end(), bt.begin() + i + 1, bt.end());
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  auto at = a.terms();
  auto bt = b.terms();
  std::vector<Term> out;
  std::size_t i = 0, j = 0;
  while (i < at.size() || j < bt.size()) {
    if (j == bt.size() || (i < at.size() && at[i].exponent > bt[j].exponent)) {
      out.push_back(at[i++]);
    } else if (i == at.size() || bt[j].exponent > at[i].exponent) {
      out.push_back(bt[j++]);
    } else {
      out.push_back(Term{at[i].exponent, checked_add(at[i].coefficient, bt[j].coefficient)});
      ++i;
      ++j;
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal natural_sum(std::span<const Ordinal> parts) {
  Ordinal acc;
  for (const Ordinal& p : parts) acc = natural_sum(acc, p);
  return acc;
}

Ordinal natural_multiple(const Ordinal& a, std::uint64_t n) {
  if (n == 0) return Ordinal();
  std::vector<Term> out(a.terms().begin(), a.terms().end());
  for (Term& t : out) t.coefficient = checked_mul(t.coefficient, n);
  return Ordinal::from_terms(std::move(out));
}

// ---------------------------------------------------------- classification

Ordinal cb_rank(const Ordinal& x) {
  if (x.is_zero()) return Ordinal();
  return x.last_exponent().value();
}

Ordinal cofinality(const Ordinal& a) {
  if (a.is_zero()) return Ordinal();
  if (a.is_successor()) return Ordinal(1);
  const Exponent& e = a.last_exponent();
  if (e.is_aleph()) {
    const Ordinal& nu = e.aleph_index();
    if (nu.is_successor()) return Ordinal::initial(nu);
    return cofinality(nu);
  }
  Ordinal v = e.value();
  if (v.is_successor()) return Ordinal::omega();
  return cofinality(v);
}

bool is_power_of_omega(const Ordinal& a) {
  return a.size() == 1 && a.terms()[0].coefficient == 1;
}

LeadingDecomposition leading_decomposition(const Ordinal& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "leading_decomposition of 0");
  auto t = a.terms();
  return LeadingDecomposition{t[0].exponent.value(), t[0].coefficient,
                              Ordinal::from_terms({t.begin() + 1, t.end()})};
}

Ordinal biembed_canonical(const Ordinal& a) {
  if (a.is_finite() || a.size() == 1) return a;
  const Term& lead = a.terms()[0];
  return Ordinal::from_terms({lead, Term{Exponent(), 1}});
}

bool is_order_reinforcing(const Ordinal& a) {
  if (a.is_finite() || is_power_of_omega(a)) return true;
  auto t = a.terms();
  return t.size() == 2 && t[1].exponent.is_zero() && t[1].coefficient == 1;
}

Ordinal mr_sum(std::span<const WeightedOrdinal> targets) {
  if (targets.empty()) throw Error(ErrorKind::EmptyInstance, "mr_sum of empty list");
  std::vector<Exponent> merged;
  for (const WeightedOrdinal& w : targets) {
    if (w.value.is_zero()) throw Error(ErrorKind::ZeroInput, "mr_sum argument is 0");
    for (const Term& t : w.value.terms()) merged.push_back(t.exponent);
  }
  std::sort(merged.begin(), merged.end(), std::greater<>());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  auto position = [&](const Exponent& e) {
    return static_cast<std::size_t>(
        std::lower_bound(merged.begin(), merged.end(), e, std::greater<>()) - merged.begin());
  };
  std::size_t n = merged.size();
  for (const WeightedOrdinal& w : targets) n = std::min(n, position(w.value.last_exponent()));

  std::vector<std::uint64_t> s(n + 1, 0);
  std::uint64_t t = 0;
  for (const WeightedOrdinal& w : targets) {
    for (const Term& term : w.value.terms()) {
      std::size_t j = position(term.exponent);
      if (j <= n) s[j] = checked_add(s[j], checked_mul(term.coefficient, w.weight));
    }
    if (position(w.value.last_exponent()) == n) t = checked_add(t, w.weight);
  }
  s[n] = s[n] - t + 1;

  std::vector<Term> out;
  for (std::size_t j = 0; j <= n; ++j) {
    if (s[j] > 0) out.push_back(Term{merged[j], s[j]});
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal mr_sum(std::span<const Ordinal> targets) {
  std::vector<WeightedOrdinal> w;
  w.reserve(targets.size());
  for (const Ordinal& a : targets) w.push_back(WeightedOrdinal{a, 1});
  return mr_sum(std::span<const WeightedOrdinal>(w));
}

Ordinal p_ord(std::span<const Ordinal> targets) { return mr_sum(targets); }

OmegaPowerDivision divide_by_omega_power(const Ordinal& x, const Ordinal& a) {
  const Exponent ea = Exponent::of(a);
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  for (const Term& t : x.terms()) {
    if (t.exponent >= ea) {
      quotient.push_back(Term{Exponent::of(left_subtract(a, t.exponent.value())), t.coefficient});
    } else {
      remainder.push_back(t);
    }
  }
  return OmegaPowerDivision{Ordinal::from_terms(std::move(quotient)),
                            Ordinal::from_terms(std::move(remainder))};
}

Ordinal derived_order_type(const Ordinal& x, const Ordinal& a) {
  if (a.is_zero()) return x;
  // Points of rank >= a are the w^a * z with z >= 1; those below x have
  // z < q + [r > 0].
  auto [q, r] = divide_by_omega_power(x, a);
  Ordinal bound = r.is_zero() ? q : add(q, Ordinal(1));
  if (bound.is_zero()) return Ordinal();
  return left_subtract(Ordinal(1), bound);
}

// ---------------------------------------------------------------- Cardinal

Cardinal Cardinal::finite(std::uint64_t n) {
  Cardinal c;
  c.count_ = n;
  return c;
}

Cardinal Cardinal::aleph(const Ordinal& index) {
  Cardinal c;
  c.aleph_index_ = index;
  return c;
}

std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) return a.count_ <=> b.count_;
  if (a.is_finite()) return std::strong_ordering::less;
  if (b.is_finite()) return std::strong_ordering::greater;
  return *a.aleph_index_ <=> *b.aleph_index_;
}

Cardinal card_successor(const Cardinal& c) {
  if (c.is_finite()) return Cardinal::finite(checked_add(c.count(), 1));
  return Cardinal::aleph(add(c.aleph_index(), Ordinal(1)));
}

Ordinal ord_of_card(const Cardinal& c) {
  if (c.is_finite()) return Ordinal(c.count());
  return Ordinal::initial(c.aleph_index());
}

Cardinal card_add(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) return Cardinal::finite(checked_add(a.count(), b.count()));
  return std::max(a, b);
}

}  // namespace ordpigeon
