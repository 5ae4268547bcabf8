#include "ordpigeon/pigeonhole.hpp"

#include <stdexcept>

#include "ordpigeon/notation.hpp"

namespace ordpigeon {

namespace {

const Ordinal kOmega = Ordinal::omega();
const Ordinal kOmega1 = Ordinal::initial(Ordinal(1));
const Ordinal kOmega2 = Ordinal::initial(Ordinal(2));
const Ordinal kOmega1Plus1 = add(kOmega1, Ordinal(1));
const Ordinal kOmegaPlus1 = add(kOmega, Ordinal(1));

struct Solution {
  CasePath path;
  PigeonholeResult result;
};

class Trail {
 public:
  explicit Trail(std::vector<std::string>* sink) : sink_(sink) {}
  void note(const std::string& line) {
    if (sink_ != nullptr) sink_->push_back(line);
  }

 private:
  std::vector<std::string>* sink_;
};

std::string fmt(const Ordinal& a) { return format_ordinal(a); }

/// Total multiplicity of the entries satisfying `pred`.
template <typename Pred>
Cardinal count_if(const NormalizedInstance& norm, Pred pred) {
  Cardinal total = Cardinal::finite(0);
  for (const Entry& e : norm.entries) {
    if (pred(e.target)) total = card_add(total, e.multiplicity);
  }
  return total;
}

bool at_least(const Cardinal& c, std::uint64_t n) { return c >= Cardinal::finite(n); }

Independent independent_result(const Cardinal& kappa) {
  Ordinal kplus = ord_of_card(card_successor(kappa));
  return Independent{
      std::max(kOmega2, kplus),
      "Prikry-Solovay: under V=L no ordinal beta satisfies beta -> (top w_1)^1_2, "
      "so consistently P = infinity for every kappa >= 2",
      "Shelah (Fr+ from a supercompact): if ZFC + a supercompact cardinal is consistent, "
      "so is P = max{w_2, kappa^+} for every kappa >= 2",
      "Silver / Shelah: ZFC + a Mahlo cardinal is consistent iff ZFC + "
      "w_2 -> (top w_1)^1_2 is consistent",
  };
}

/// Sum over entries of multiplicity * (target - 1), for finite targets.
Ordinal finite_excess(const NormalizedInstance& norm, const Entry* skip) {
  Ordinal total;
  for (const Entry& e : norm.entries) {
    std::uint64_t w = e.multiplicity.count();
    if (&e == skip) --w;
    total = natural_sum(total, natural_multiple(Ordinal(e.target.finite_value() - 1), w));
  }
  return total;
}

Solution solve_case2(const NormalizedInstance& norm, const Entry& r, Trail& trail) {
  const Ordinal& a = r.target;
  const bool power = is_power_of_omega(a);
  trail.note("exactly one target " + fmt(a) + " >= w_1+1, every other target <= w");
  if (!norm.kappa.is_finite()) {
    const Ordinal kplus = ord_of_card(card_successor(norm.kappa));
    trail.note("kappa = " + format_cardinal(norm.kappa) + " is infinite");
    if (!power) {
      trail.note(fmt(a) + " is not a power of w: P = alpha_r * kappa^+");
      return {CasePath::C2aI, Exists{mul(a, kplus)}};
    }
    const Ordinal cf = cofinality(a);
    trail.note(fmt(a) + " is a power of w with cofinality " + fmt(cf));
    if (cf > ord_of_card(norm.kappa)) {
      trail.note("cf(alpha_r) > kappa: P = alpha_r");
      return {CasePath::C2aIIA, Exists{a}};
    }
    if (cf > kOmega) {
      trail.note("aleph_0 < cf(alpha_r) <= kappa: P = alpha_r * kappa^+");
      return {CasePath::C2aIIB, Exists{mul(a, kplus)}};
    }
    const Ordinal beta = a.leading_exponent().value();
    const Ordinal delta = cb_rank(beta);
    trail.note("cf(alpha_r) = w; alpha_r = w^beta with beta = gamma + w^delta, delta = " +
               fmt(delta));
    if (delta < kplus) {
      trail.note("delta < kappa^+: P = alpha_r * kappa^+");
      return {CasePath::C2aIIC_lt, Exists{mul(a, kplus)}};
    }
    if (delta == kplus) {
      throw std::logic_error("delta = kappa^+ contradicts countable cofinality");
    }
    trail.note("delta > kappa^+: P = alpha_r");
    return {CasePath::C2aIIC_gt, Exists{a}};
  }

  trail.note("kappa = " + format_cardinal(norm.kappa) + " is finite");
  bool some_omega = false;
  for (const Entry& e : norm.entries) some_omega = some_omega || e.target == kOmega;
  if (some_omega) {
    trail.note("another target equals w");
    if (power) {
      trail.note(fmt(a) + " is a power of w: P = alpha_r");
      return {CasePath::C2bI, Exists{a}};
    }
    trail.note(fmt(a) + " is not a power of w: P = alpha_r * w");
    return {CasePath::C2bII, Exists{mul(a, kOmega)}};
  }
  trail.note("every other target is finite");
  if (power) {
    trail.note(fmt(a) + " is a power of w: P = alpha_r");
    return {CasePath::C2cI, Exists{a}};
  }
  if (norm.kappa == Cardinal::finite(1)) {
    Ordinal floor = biembed_canonical(a);
    trail.note("kappa = 1: P is the biembeddability representative " + fmt(floor) + " of " +
               fmt(a));
    return {CasePath::C2cI, Exists{floor}};
  }
  // w^beta*m+1 <= alpha_r <= w^beta*(m+1)
  const LeadingDecomposition d = leading_decomposition(a);
  const std::uint64_t m = d.remainder.is_zero() ? d.multiple - 1 : d.multiple;
  const Ordinal excess = finite_excess(norm, &r);
  trail.note("kappa > 1, " + fmt(a) + " not a power of w: beta = " + fmt(d.exponent) +
             ", m = " + std::to_string(m) + "; P = w^beta*(sum_{i != r}(alpha_i - 1) + m) + 1");
  Ordinal p = mul(omega_pow(d.exponent), add(excess, Ordinal(m)));
  return {CasePath::C2cII, Exists{add(p, Ordinal(1))}};
}

Solution solve_case6(const NormalizedInstance& norm, Trail& trail) {
  trail.note("every target is countable and kappa = " + format_cardinal(norm.kappa) +
             " is finite");
  bool all_finite = true;
  bool some_power = false;
  for (const Entry& e : norm.entries) {
    all_finite = all_finite && e.target.is_finite();
    some_power = some_power || is_power_of_omega(e.target);
  }
  if (all_finite) {
    trail.note("every target is finite: P = sum(alpha_i - 1) + 1");
    return {CasePath::C6a, Exists{add(finite_excess(norm, nullptr), Ordinal(1))}};
  }
  if (some_power) {
    trail.note("some target is a power of w: P = w^(beta_0 (.) ... (.) beta_{k-1}) with "
               "beta_i least such that alpha_i <= w^beta_i");
    return {CasePath::C6b, Exists{p_top_case6_power(norm)}};
  }
  trail.note("no target is a power of w and some target is infinite");
  Ordinal p = p_top_case6_multiples(norm);
  // Shape w^B*(m_s+1) identifies the distinguishing subcase.
  if (p.is_successor()) {
    trail.note("no distinguished s: P = w^(#beta_i)*(sum(m_i - 1) + 1) + 1");
    return {CasePath::C6cII, Exists{p}};
  }
  trail.note("some s has alpha_s = w^beta_s*(m_s+1), minimal CB(beta_s), and m_i = 1 "
             "elsewhere: P = w^(#beta_i)*(m_s+1)");
  return {CasePath::C6cI, Exists{p}};
}

Solution solve(const NormalizedInstance& norm, Trail& trail) {
  auto big = [](const Ordinal& a) { return a >= kOmega1Plus1; };
  const Cardinal n_big = count_if(norm, big);
  const Cardinal n_above_omega = count_if(norm, [](const Ordinal& a) { return a >= kOmegaPlus1; });

  if (at_least(n_big, 1)) {
    if (at_least(n_above_omega, 2)) {
      trail.note("one target >= w_1+1 and a different target >= w+1: P does not exist");
      return {CasePath::C1, Infinite{}};
    }
    for (const Entry& e : norm.entries) {
      if (big(e.target)) return solve_case2(norm, e, trail);
    }
  }

  const Cardinal n_omega1 = count_if(norm, [](const Ordinal& a) { return a == kOmega1; });
  if (at_least(n_omega1, 2)) {
    trail.note("every target <= w_1 and at least two equal w_1: independent of ZFC, "
               "with ZFC lower bound max{w_2, kappa^+}");
    return {CasePath::C3, independent_result(norm.kappa)};
  }
  if (at_least(n_omega1, 1)) {
    Ordinal kplus = ord_of_card(card_successor(norm.kappa));
    trail.note("exactly one target equals w_1, all others countable: P = max{w_1, kappa^+}");
    return {CasePath::C4, Exists{std::max(kOmega1, kplus)}};
  }
  if (!norm.kappa.is_finite()) {
    trail.note("every target countable and kappa = " + format_cardinal(norm.kappa) +
               " infinite: P = kappa^+");
    return {CasePath::C5, Exists{ord_of_card(card_successor(norm.kappa))}};
  }
  return solve_case6(norm, trail);
}

void require_case6(const NormalizedInstance& norm) {
  if (!norm.kappa.is_finite()) {
    throw Error(ErrorKind::PreconditionViolated, "case 6 requires finite kappa");
  }
  for (const Entry& e : norm.entries) {
    if (!e.target.is_countable() || e.target < Ordinal(2)) {
      throw Error(ErrorKind::PreconditionViolated, "case 6 requires countable targets >= 2");
    }
  }
}

}  // namespace

const char* to_string(CasePath path) {
  switch (path) {
    case CasePath::C1: return "C1";
    case CasePath::C2aI: return "C2aI";
    case CasePath::C2aIIA: return "C2aIIA";
    case CasePath::C2aIIB: return "C2aIIB";
    case CasePath::C2aIIC_lt: return "C2aIIC_lt";
    case CasePath::C2aIIC_gt: return "C2aIIC_gt";
    case CasePath::C2bI: return "C2bI";
    case CasePath::C2bII: return "C2bII";
    case CasePath::C2cI: return "C2cI";
    case CasePath::C2cII: return "C2cII";
    case CasePath::C3: return "C3";
    case CasePath::C4: return "C4";
    case CasePath::C5: return "C5";
    case CasePath::C6a: return "C6a";
    case CasePath::C6b: return "C6b";
    case CasePath::C6cI: return "C6cI";
    case CasePath::C6cII: return "C6cII";
    case CasePath::Zero: return "Zero";
    case CasePath::AllOnes: return "AllOnes";
  }
  return "Unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "Holds";
    case Verdict::Fails: return "Fails";
    case Verdict::IndependentUnknown: return "IndependentUnknown";
  }
  return "Unknown";
}

Normalization normalize(const Instance& inst) {
  NormalizedInstance out;
  out.kappa = Cardinal::finite(0);
  Cardinal total = Cardinal::finite(0);
  for (const Entry& e : inst.entries) {
    if (e.multiplicity == Cardinal::finite(0)) continue;
    total = card_add(total, e.multiplicity);
    if (e.target.is_zero()) return ShortCircuit{Exists{Ordinal()}, CasePath::Zero};
    if (e.target == Ordinal(1)) continue;
    out.entries.push_back(e);
    out.kappa = card_add(out.kappa, e.multiplicity);
  }
  if (total == Cardinal::finite(0)) {
    throw Error(ErrorKind::EmptyInstance, "instance has no colours");
  }
  if (out.entries.empty()) return ShortCircuit{Exists{Ordinal(1)}, CasePath::AllOnes};
  return out;
}

CasePath classify_case(const NormalizedInstance& norm) {
  Trail trail(nullptr);
  return solve(norm, trail).path;
}

PigeonholeResult p_top(const NormalizedInstance& norm) {
  Trail trail(nullptr);
  return solve(norm, trail).result;
}

PigeonholeResult p_top(const Instance& inst) {
  Normalization n = normalize(inst);
  if (auto* sc = std::get_if<ShortCircuit>(&n)) return sc->result;
  return p_top(std::get<NormalizedInstance>(n));
}

Verdict relation_holds(const Ordinal& beta, const PigeonholeResult& result) {
  if (auto* e = std::get_if<Exists>(&result)) return beta >= e->value ? Verdict::Holds : Verdict::Fails;
  if (std::holds_alternative<Infinite>(result)) return Verdict::Fails;
  const auto& ind = std::get<Independent>(result);
  return beta < ind.zfc_lower ? Verdict::Fails : Verdict::IndependentUnknown;
}

Verdict relation_holds(const Ordinal& beta, const Instance& inst) {
  return relation_holds(beta, p_top(inst));
}

Ordinal minimal_omega_power_bound(const Ordinal& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "minimal_omega_power_bound of 0");
  if (is_power_of_omega(a)) return a.leading_exponent().value();
  return add(a.leading_exponent().value(), Ordinal(1));
}

Case6Decomposition case6_decompose(const Ordinal& a) {
  if (a.is_finite()) return Case6Decomposition{Ordinal(), a.finite_value(), false};
  if (is_power_of_omega(a)) {
    throw Error(ErrorKind::PowerOfOmegaInput, "case6_decompose of a power of w");
  }
  LeadingDecomposition d = leading_decomposition(a);
  if (d.remainder.is_zero()) return Case6Decomposition{d.exponent, d.multiple - 1, true};
  return Case6Decomposition{d.exponent, d.multiple, false};
}

Ordinal p_top_case6_power(const NormalizedInstance& norm) {
  require_case6(norm);
  std::vector<WeightedOrdinal> bounds;
  bool some_power = false;
  for (const Entry& e : norm.entries) {
    some_power = some_power || is_power_of_omega(e.target);
    bounds.push_back(WeightedOrdinal{minimal_omega_power_bound(e.target), e.multiplicity.count()});
  }
  if (!some_power) throw Error(ErrorKind::PreconditionViolated, "no target is a power of w");
  return omega_pow(mr_sum(std::span<const WeightedOrdinal>(bounds)));
}

Ordinal p_top_case6_multiples(const NormalizedInstance& norm) {
  require_case6(norm);
  std::vector<Case6Decomposition> parts;
  bool some_infinite = false;
  Ordinal B;
  for (const Entry& e : norm.entries) {
    if (is_power_of_omega(e.target)) {
      throw Error(ErrorKind::PreconditionViolated, "a target is a power of w");
    }
    some_infinite = some_infinite || !e.target.is_finite();
    parts.push_back(case6_decompose(e.target));
    B = natural_sum(B, natural_multiple(parts.back().beta, e.multiplicity.count()));
  }
  if (!some_infinite) throw Error(ErrorKind::PreconditionViolated, "every target is finite");
  const Ordinal base = omega_pow(B);

  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (!parts[s].exact_multiple) continue;
    const Ordinal cb_s = cb_rank(parts[s].beta);
    bool ok = norm.entries[s].multiplicity.count() == 1 || parts[s].m == 1;
    for (std::size_t i = 0; i < parts.size() && ok; ++i) {
      ok = cb_s <= cb_rank(parts[i].beta) && (i == s || parts[i].m == 1);
    }
    if (ok) return mul(base, Ordinal(parts[s].m + 1));
  }

  std::uint64_t excess = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    excess += (parts[i].m - 1) * norm.entries[i].multiplicity.count();
  }
  return add(mul(base, Ordinal(excess + 1)), Ordinal(1));
}

CaseExplanation explain_case(const Instance& inst) {
  Normalization n = normalize(inst);
  CaseExplanation out{CasePath::Zero, {}, Exists{}};
  if (auto* sc = std::get_if<ShortCircuit>(&n)) {
    out.path = sc->path;
    out.result = sc->result;
    out.trail.push_back(sc->path == CasePath::Zero
                            ? "some target is 0: P = 0"
                            : "every target is 1: P = 1");
    return out;
  }
  const auto& norm = std::get<NormalizedInstance>(n);
  out.trail.push_back("targets equal to 1 dropped; kappa = " + format_cardinal(norm.kappa));
  Trail trail(&out.trail);
  Solution s = solve(norm, trail);
  out.path = s.path;
  out.result = s.result;
  return out;
}

}  // namespace ordpigeon
