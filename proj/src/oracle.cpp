#include "ordpigeon/oracle.hpp"

#include <algorithm>
#include <random>

#include "ordpigeon/witness.hpp"

namespace ordpigeon {

namespace {

constexpr std::uint64_t kColouringLimit = 30'000'000;

bool find_bad_colouring(std::uint64_t point, std::uint64_t beta,
                        const std::vector<std::uint64_t>& targets,
                        std::vector<std::uint64_t>& counts) {
  if (point == beta) return true;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (counts[i] + 1 >= targets[i]) continue;
    ++counts[i];
    bool found = find_bad_colouring(point + 1, beta, targets, counts);
    --counts[i];
    if (found) return true;
  }
  return false;
}

/// Terms built from `exponents` (ascending) with at most `monomials` terms
/// and coefficients in [1, max_coefficient].
void build_terms(const std::vector<Ordinal>& exponents, std::size_t start,
                 std::size_t monomials, std::uint64_t max_coefficient, std::vector<Term>& prefix,
                 std::vector<Ordinal>& out) {
  out.push_back(Ordinal::from_terms(prefix));
  if (prefix.size() == monomials) return;
  // Next term has a smaller exponent than the previous one.
  for (std::size_t j = start; j-- > 0;) {
    for (std::uint64_t c = 1; c <= max_coefficient; ++c) {
      prefix.push_back(Term{Exponent::of(exponents[j]), c});
      build_terms(exponents, j, monomials, max_coefficient, prefix, out);
      prefix.pop_back();
    }
  }
}

bool expand_finite(const Instance& inst, std::vector<Ordinal>& expanded) {
  for (const Entry& e : inst.entries) {
    if (!e.multiplicity.is_finite()) return false;
    for (std::uint64_t j = 0; j < e.multiplicity.count(); ++j) expanded.push_back(e.target);
  }
  return true;
}

}  // namespace

bool finite_arrow_check(std::uint64_t beta, const std::vector<std::uint64_t>& targets) {
  if (targets.empty()) throw Error(ErrorKind::PreconditionViolated, "no colours");
  for (std::uint64_t t : targets) {
    if (t == 0) return true;
  }
  std::uint64_t colourings = 1;
  for (std::uint64_t i = 0; i < beta; ++i) {
    colourings *= targets.size();
    if (colourings > kColouringLimit) {
      throw Error(ErrorKind::TooLarge, "too many colourings for exhaustive search");
    }
  }
  std::vector<std::uint64_t> counts(targets.size(), 0);
  return !find_bad_colouring(0, beta, targets, counts);
}

std::vector<Ordinal> enumerate_ordinals_below(const EnumerationBounds& bounds) {
  std::vector<Ordinal> exponents;
  if (bounds.max_exponent.is_finite()) {
    for (std::uint64_t e = 0; e <= bounds.max_exponent.finite_value(); ++e) {
      exponents.emplace_back(e);
    }
  } else {
    EnumerationBounds inner = bounds;
    inner.max_exponent = bounds.max_exponent.leading_exponent().value();
    for (Ordinal& e : enumerate_ordinals_below(inner)) {
      if (e <= bounds.max_exponent) exponents.push_back(std::move(e));
    }
  }
  std::vector<Ordinal> out;
  std::vector<Term> prefix;
  build_terms(exponents, exponents.size(), bounds.max_monomials, bounds.max_coefficient, prefix,
              out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool mr_sum_bruteforce_check(const std::vector<Ordinal>& bounds, const Ordinal& candidate,
                             std::size_t sample_count) {
  if (natsum_expressible(candidate, bounds)) return false;

  auto expressible = [&](const Ordinal& d) { return natsum_expressible(d, bounds).has_value(); };
  const std::uint64_t finite_limit =
      candidate.is_finite() ? std::min<std::uint64_t>(candidate.finite_value(), 50) : 50;
  for (std::uint64_t d = 0; d < finite_limit; ++d) {
    if (!expressible(Ordinal(d))) return false;
  }
  if (candidate.is_successor()) {
    auto t = candidate.terms();
    std::vector<Term> pred(t.begin(), t.end());
    if (--pred.back().coefficient == 0) pred.pop_back();
    if (!expressible(Ordinal::from_terms(std::move(pred)))) return false;
  }

  // Structured draws: a prefix of the candidate, then w^a*b + c.
  std::mt19937_64 rng(0x5eed);
  auto t = candidate.terms();
  std::vector<Ordinal> small_exponents = {Ordinal(0), Ordinal(1), Ordinal(2)};
  for (const Term& term : t) small_exponents.push_back(term.exponent.value());
  std::size_t drawn = 0;
  for (std::size_t attempt = 0; drawn < sample_count && attempt < sample_count * 20; ++attempt) {
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, t.size())(rng);
    Ordinal d = Ordinal::from_terms({t.begin(), t.begin() + static_cast<std::ptrdiff_t>(cut)});
    const Ordinal& a = small_exponents[std::uniform_int_distribution<std::size_t>(
        0, small_exponents.size() - 1)(rng)];
    const std::uint64_t b = std::uniform_int_distribution<std::uint64_t>(1, 3)(rng);
    const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(0, 3)(rng);
    d = add(add(d, mul(omega_pow(a), Ordinal(b))), Ordinal(c));
    if (d >= candidate) continue;
    ++drawn;
    if (!expressible(d)) return false;
  }
  return true;
}

std::optional<Ordinal> subfamily_formula(const Instance& inst) {
  std::vector<Ordinal> targets;
  if (!expand_finite(inst, targets)) return std::nullopt;
  targets.erase(std::remove(targets.begin(), targets.end(), Ordinal(1)), targets.end());
  if (targets.empty()) return std::nullopt;
  for (const Ordinal& t : targets) {
    if (t.is_zero() || !t.is_countable()) return std::nullopt;
  }

  // Powers w^a (a > 0) mixed with successors w^d + 1 (d > 0).
  std::vector<Ordinal> power_exps;
  std::vector<Ordinal> successor_exps;
  bool mixable = true;
  for (const Ordinal& t : targets) {
    if (t.is_finite()) {
      mixable = false;
    } else if (is_power_of_omega(t)) {
      power_exps.push_back(t.leading_exponent().value());
    } else if (t.size() == 2 && t.terms()[0].coefficient == 1 && t.terms()[1] == Term{}) {
      successor_exps.push_back(t.leading_exponent().value());
    } else {
      mixable = false;
    }
  }
  if (mixable && !power_exps.empty()) {
    std::vector<Ordinal> args = power_exps;
    for (const Ordinal& d : successor_exps) args.push_back(add(d, Ordinal(1)));
    return omega_pow(mr_sum(std::span<const Ordinal>(args)));
  }
  if (mixable) {
    return add(omega_pow(natural_sum(std::span<const Ordinal>(successor_exps))), Ordinal(1));
  }

  // Simple multiples: w^a*m+1 with a > 0, or finite m.
  Ordinal alpha;
  std::uint64_t m = 1;
  for (const Ordinal& t : targets) {
    if (t.is_finite()) {
      m += t.finite_value() - 1;
      continue;
    }
    auto terms = t.terms();
    if (terms.size() != 2 || !(terms[1] == Term{})) return std::nullopt;
    alpha = natural_sum(alpha, terms[0].exponent.value());
    m += terms[0].coefficient - 1;
  }
  if (alpha.is_zero()) return Ordinal(m);
  return add(mul(omega_pow(alpha), Ordinal(m)), Ordinal(1));
}

CrossCheckReport cross_check_p_top(const std::vector<Instance>& grid) {
  CrossCheckReport report;
  for (const Instance& inst : grid) {
    std::optional<Ordinal> expected = subfamily_formula(inst);
    if (!expected) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    PigeonholeResult actual = p_top(inst);
    const auto* e = std::get_if<Exists>(&actual);
    if (e == nullptr || e->value != *expected) {
      report.mismatches.push_back({inst, *expected, actual});
    }
  }
  return report;
}

}  // namespace ordpigeon
