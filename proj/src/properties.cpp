#include "ordpigeon/properties.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "ordpigeon/generators.hpp"
#include "ordpigeon/notation.hpp"
#include "ordpigeon/oracle.hpp"
#include "ordpigeon/pigeonhole.hpp"
#include "ordpigeon/witness.hpp"

namespace ordpigeon {

namespace {

const Ordinal kOne(1);
const Ordinal kOmega = Ordinal::omega();

/// Empty string means the case passed.
using CaseBody = std::function<std::string(std::size_t)>;

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& property, std::size_t cases, const CaseBody& body) {
    run(property, cases, body, false);
  }
  void exhaust(const std::string& property, std::size_t cases, const CaseBody& body) {
    run(property, cases, body, true);
  }

  std::vector<PropertyOutcome> take() { return std::move(out_); }

 private:
  void run(const std::string& property, std::size_t cases, const CaseBody& body,
           bool exhaustive) {
    PropertyOutcome o;
    o.exhaustive = exhaustive;
    o.suite = name_;
    o.name = property;
    for (std::size_t i = 0; i < cases; ++i) {
      ++o.cases;
      std::string why;
      try {
        why = body(i);
      } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
      }
      if (!why.empty() && o.failures++ == 0) o.first_failure = why;
    }
    out_.push_back(std::move(o));
  }

  std::string name_;
  std::vector<PropertyOutcome> out_;
};

template <typename... Args>
std::string msg(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::string show(const Instance& inst) { return format_instance(inst); }

/// Order used for monotonicity: Exists(a) by a, Independent by its ZFC lower
/// bound, Infinite on top (nullopt).
std::optional<Ordinal> monotone_key(const PigeonholeResult& r) {
  if (const auto* e = std::get_if<Exists>(&r)) return e->value;
  if (const auto* i = std::get_if<Independent>(&r)) return i->zfc_lower;
  return std::nullopt;
}

bool key_leq(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

Instance canonical_instance(const Instance& inst) {
  Instance out = inst;
  for (Entry& e : out.entries) e.target = biembed_canonical(e.target);
  return out;
}

/// w^2*d[0] + w*d[1] + d[2].
Ordinal from_digits(const std::array<std::uint64_t, 3>& d) {
  std::vector<Term> t;
  for (int i = 0; i < 3; ++i) {
    if (d[i] > 0) t.push_back(Term{Exponent::finite(static_cast<std::uint64_t>(2 - i)), d[i]});
  }
  return Ordinal::from_terms(std::move(t));
}

std::string check_parts(const std::vector<Ordinal>& parts, const Ordinal& delta,
                        const std::vector<Ordinal>& bounds) {
  if (parts.size() != bounds.size()) return "wrong number of parts";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i] < bounds[i])) return msg("part ", parts[i], " not below ", bounds[i]);
  }
  if (natural_sum(std::span<const Ordinal>(parts)) != delta) return "parts do not sum to delta";
  return "";
}

/// Draws below and around v: a prefix of v followed by a small monomial.
Ordinal draw_near(Generator& g, const Ordinal& v) {
  auto t = v.terms();
  const std::size_t cut = g.uniform(0, t.size());
  std::vector<Term> head(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(cut));
  Ordinal d = Ordinal::from_terms(head);
  std::vector<Ordinal> exps = {Ordinal(0), Ordinal(1), Ordinal(2)};
  for (const Term& term : t) exps.push_back(term.exponent.value());
  const Ordinal& e = exps[g.uniform(0, exps.size() - 1)];
  d = add(d, mul(omega_pow(e), Ordinal(g.uniform(1, 4))));
  return add(d, Ordinal(g.uniform(0, 2)));
}

/// Random point of the rank colouring's domain, biased towards ranks in use.
Ordinal sample_point(Generator& g, const RankColouring& col) {
  auto t = col.domain.terms();
  for (int attempt = 0; attempt < 50; ++attempt) {
    const std::size_t cut = g.uniform(0, t.size());
    Ordinal x = Ordinal::from_terms({t.begin(), t.begin() + static_cast<std::ptrdiff_t>(cut)});
    Ordinal rank;
    if (g.chance(0.2) || col.rank_classes.empty()) {
      rank = col.top_exponent;
    } else {
      const IntervalUnion& u = col.rank_classes[g.uniform(0, col.rank_classes.size() - 1)];
      if (u.empty()) continue;
      const Interval& iv = u[g.uniform(0, u.size() - 1)];
      rank = iv.lo;
      if (g.chance(0.5)) {
        Ordinal bumped = add(iv.lo, Ordinal(g.uniform(1, 2)));
        if (bumped < iv.hi) rank = bumped;
      }
    }
    x = add(x, mul(omega_pow(rank), Ordinal(g.uniform(1, 3))));
    if (x < col.domain) return x;
  }
  return Ordinal();
}

}  // namespace

// ---------------------------------------------------------------- ordinal

std::vector<PropertyOutcome> ordinal_properties(const PropertyOptions& opts) {
  Suite s("ordinal-core");
  Generator g(opts.seed);

  s.check("compare trichotomy and transitivity", opts.cases, [&](std::size_t) -> std::string {
    Ordinal a = g.with_atoms(), b = g.with_atoms(), c = g.with_atoms();
    const int n = int(a < b) + int(a == b) + int(a > b);
    if (n != 1) return msg("trichotomy fails for ", a, ", ", b);
    if ((compare(a, b) < 0) != (compare(b, a) > 0)) return msg("asymmetry fails ", a, ", ", b);
    if (a <= b && b <= c && !(a <= c)) return msg("transitivity fails ", a, ", ", b, ", ", c);
    // Initial ordinals sit above every power with a smaller exponent.
    const Ordinal x = g.countable();
    const std::uint64_t v = g.uniform(1, 2);
    if (!(omega_pow(x) < Ordinal::initial(Ordinal(v)))) return msg("w^", x, " >= w_", v);
    if ((Ordinal::initial(Ordinal(v)) == Ordinal::initial(Ordinal(3 - v)))) return "w_1 = w_2";
    return "";
  });

  s.check("add laws", opts.cases, [&](std::size_t) -> std::string {
    Ordinal a = g.with_atoms(), b = g.with_atoms(), c = g.with_atoms();
    if (add(add(a, b), c) != add(a, add(b, c))) return msg("not associative ", a, ", ", b, ", ", c);
    if (add(a, Ordinal()) != a || add(Ordinal(), a) != a) return msg("zero not neutral ", a);
    if (compare(a, add(a, b)) > 0) return msg(a, " > ", a, "+", b);
    if (left_subtract(a, add(a, b)) != b) return msg("left_subtract fails ", a, ", ", b);
    return "";
  });

  s.check("mul laws", opts.cases, [&](std::size_t) -> std::string {
    Ordinal a = g.with_atoms(1, 2), b = g.with_atoms(1, 2), c = g.with_atoms(1, 2);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return msg("not associative ", a, ", ", b, ", ", c);
    if (mul(a, kOne) != a || mul(kOne, a) != a) return msg("one not neutral ", a);
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
      return msg("not left distributive ", a, ", ", b, ", ", c);
    }
    return "";
  });

  s.check("natural_sum laws", opts.cases, [&](std::size_t) -> std::string {
    Ordinal a = g.with_atoms(), b = g.with_atoms(), c = g.with_atoms();
    if (natural_sum(a, b) != natural_sum(b, a)) return msg("not commutative ", a, ", ", b);
    if (natural_sum(natural_sum(a, b), c) != natural_sum(a, natural_sum(b, c))) {
      return msg("not associative ", a, ", ", b, ", ", c);
    }
    const Ordinal bigger = add(b, g.positive());
    if (!(natural_sum(a, b) < natural_sum(a, bigger))) return msg("not strictly monotone ", a, ", ", b);
    if (natural_sum(a, b) < add(a, b)) return msg("below ordinal sum ", a, ", ", b);
    return "";
  });

  // Exhaustive: every pair below w^3 with coefficients <= 3 against digitwise
  // addition of the base-w expansions.
  std::vector<std::array<std::uint64_t, 3>> digits;
  for (std::uint64_t x = 0; x < 64; ++x) digits.push_back({x / 16, (x / 4) % 4, x % 4});
  s.exhaust("natural_sum agrees with digitwise addition below w^3", digits.size() * digits.size(),
          [&](std::size_t i) -> std::string {
            const auto& p = digits[i / digits.size()];
            const auto& q = digits[i % digits.size()];
            const std::array<std::uint64_t, 3> r = {p[0] + q[0], p[1] + q[1], p[2] + q[2]};
            if (natural_sum(from_digits(p), from_digits(q)) != from_digits(r)) {
              return msg("mismatch at ", from_digits(p), ", ", from_digits(q));
            }
            return "";
          });

  s.check("cb_rank", opts.cases, [&](std::size_t) -> std::string {
    const Ordinal gamma = g.with_atoms();
    const std::uint64_t m = g.uniform(1, 5);
    if (cb_rank(mul(omega_pow(gamma), Ordinal(m))) != gamma) return msg("cb_rank(w^", gamma, "*m)");
    const Ordinal x = g.with_atoms();
    if (!x.is_zero() && cb_rank(x) > x.leading_exponent().value()) return msg("cb_rank(", x, ")");
    return "";
  });

  s.check("cofinality idempotent", opts.cases, [&](std::size_t) -> std::string {
    const Ordinal a = g.with_atoms();
    if (a <= kOne) return "";
    if (cofinality(cofinality(a)) != cofinality(a)) return msg("cofinality(", a, ")");
    return "";
  });

  s.check("biembed_canonical", opts.cases, [&](std::size_t) -> std::string {
    const Ordinal a = g.with_atoms();
    const Ordinal c = biembed_canonical(a);
    if (biembed_canonical(c) != c) return msg("not idempotent at ", a);
    if (c > a) return msg("canonical form above ", a);
    if (a.is_zero()) return "";
    const LeadingDecomposition da = leading_decomposition(a);
    const LeadingDecomposition dc = leading_decomposition(c);
    if (da.exponent != dc.exponent || da.multiple != dc.multiple) {
      return msg("leading decomposition changes at ", a);
    }
    return "";
  });

  s.check("is_order_reinforcing syntactic form", opts.cases, [&](std::size_t) -> std::string {
    const Ordinal a = g.chance(0.3) ? biembed_canonical(g.with_atoms()) : g.with_atoms();
    auto t = a.terms();
    const bool power = t.size() == 1 && t[0].coefficient == 1;
    const bool multiple_plus_one = t.size() == 2 && t[1] == Term{Exponent(), 1};
    const bool expected = a.is_finite() || power || multiple_plus_one;
    if (is_order_reinforcing(a) != expected) return msg("is_order_reinforcing(", a, ")");
    return "";
  });

  s.check("mr_sum ignores 1 and order", opts.cases, [&](std::size_t) -> std::string {
    std::vector<Ordinal> list;
    const std::size_t n = g.uniform(1, 4);
    for (std::size_t i = 0; i < n; ++i) list.push_back(g.positive(1, 2, 3));
    const Ordinal v = mr_sum(std::span<const Ordinal>(list));
    std::vector<Ordinal> more = list;
    more.push_back(kOne);
    if (mr_sum(std::span<const Ordinal>(more)) != v) return "appending 1 changes mr_sum";
    std::shuffle(list.begin(), list.end(), g.rng());
    if (mr_sum(std::span<const Ordinal>(list)) != v) return "mr_sum depends on order";
    return "";
  });

  s.check("mr_sum is the least non-expressible value", opts.heavy_cases,
          [&](std::size_t) -> std::string {
            const std::vector<Ordinal> bounds = {g.positive(1, 2, 2), g.positive(1, 2, 2)};
            const Ordinal v = mr_sum(std::span<const Ordinal>(bounds));
            if (natsum_expressible(v, bounds)) return msg(v, " is expressible");
            for (int j = 0; j < 8; ++j) {
              const Ordinal d = draw_near(g, v);
              if (d >= v) continue;
              auto parts = natsum_expressible(d, bounds);
              if (!parts) return msg(d, " < ", v, " not expressible");
              std::string why = check_parts(*parts, d, bounds);
              if (!why.empty()) return why;
            }
            return "";
          });
  return s.take();
}

// ---------------------------------------------------------------- engine

std::vector<PropertyOutcome> engine_properties(const PropertyOptions& opts) {
  Suite s("pigeonhole-engine");
  Generator g(opts.seed + 1);

  s.check("exactly one leaf per instance", opts.cases, [&](std::size_t) -> std::string {
    const Instance inst = g.instance();
    const Normalization n = normalize(inst);
    const PigeonholeResult r = p_top(inst);
    const CaseExplanation ex = explain_case(inst);
    if (ex.result != r) return msg("explain_case disagrees on ", show(inst));
    if (const auto* norm = std::get_if<NormalizedInstance>(&n)) {
      if (classify_case(*norm) != ex.path) return msg("classify_case disagrees on ", show(inst));
    }
    return "";
  });

  s.check("appending targets 1 changes nothing", opts.cases, [&](std::size_t) -> std::string {
    Instance inst = g.instance();
    const PigeonholeResult r = p_top(inst);
    const std::array<Cardinal, 4> lambdas = {Cardinal::finite(1), Cardinal::finite(3),
                                             Cardinal::aleph(Ordinal(0)),
                                             Cardinal::aleph(Ordinal(1))};
    inst.entries.push_back(Entry{kOne, lambdas[g.uniform(0, 3)]});
    if (p_top(inst) != r) return msg("p_top changed on ", show(inst));
    return "";
  });

  s.check("monotone in each target", opts.cases, [&](std::size_t) -> std::string {
    const Instance inst = g.instance();
    Instance raised = inst;
    Entry& e = raised.entries[g.uniform(0, raised.entries.size() - 1)];
    const Ordinal x = g.chance(0.2) ? g.with_atoms(1) : g.countable(1);
    e.target = g.chance(0.5) ? add(e.target, x) : natural_sum(e.target, x);
    const PigeonholeResult before = p_top(inst);
    const PigeonholeResult after = p_top(raised);
    if (!key_leq(monotone_key(before), monotone_key(after))) {
      return msg("raising ", show(inst), " to ", show(raised), " lowers ", format_result(before),
                 " to ", format_result(after));
    }
    return "";
  });

  s.check("invariant under biembeddability canonicalization", opts.cases,
          [&](std::size_t) -> std::string {
            const Instance inst = g.instance();
            if (p_top(inst) != p_top(canonical_instance(inst))) return msg("differs on ", show(inst));
            return "";
          });

  s.check("case 6 results are w^g*m or w^g*m+1", opts.cases, [&](std::size_t) -> std::string {
    const Instance inst = g.countable_instance(3, 2);
    const CaseExplanation ex = explain_case(inst);
    const auto* e = std::get_if<Exists>(&ex.result);
    if (e == nullptr) return msg("no value for ", show(inst));
    auto t = e->value.terms();
    const bool shape = t.size() == 1 || (t.size() == 2 && t[1] == Term{Exponent(), 1});
    if (!shape) return msg("shape of ", e->value, " for ", show(inst));
    return "";
  });

  s.check("powers and successors of powers", opts.cases, [&](std::size_t) -> std::string {
    std::vector<Ordinal> exps;
    const std::size_t k = g.uniform(1, 3);
    for (std::size_t i = 0; i < k; ++i) exps.push_back(g.positive(1, 2, 3));
    Instance powers;
    Instance successors;
    for (const Ordinal& a : exps) {
      powers.entries.push_back(Entry{omega_pow(a)});
      successors.entries.push_back(Entry{add(omega_pow(a), kOne)});
    }
    const PigeonholeResult rp = p_top(powers);
    if (rp != PigeonholeResult(Exists{omega_pow(p_ord(std::span<const Ordinal>(exps)))})) {
      return msg("powers ", show(powers), " gave ", format_result(rp));
    }
    const Ordinal expected = add(omega_pow(natural_sum(std::span<const Ordinal>(exps))), kOne);
    const PigeonholeResult rs = p_top(successors);
    if (rs != PigeonholeResult(Exists{expected})) {
      return msg("successors ", show(successors), " gave ", format_result(rs));
    }
    return "";
  });

  s.check("invariant under permutation", opts.cases, [&](std::size_t) -> std::string {
    Instance inst = g.instance();
    const PigeonholeResult r = p_top(inst);
    std::shuffle(inst.entries.begin(), inst.entries.end(), g.rng());
    if (p_top(inst) != r) return msg("order matters for ", show(inst));
    return "";
  });

  s.check("relation_holds monotone in beta", opts.cases, [&](std::size_t) -> std::string {
    const Instance inst = g.instance();
    const PigeonholeResult r = p_top(inst);
    Ordinal b1 = g.with_atoms();
    if (const auto* e = std::get_if<Exists>(&r); e != nullptr && g.chance(0.5)) b1 = e->value;
    const Ordinal b2 = add(b1, g.chance(0.5) ? g.countable() : g.with_atoms());
    if (relation_holds(b1, inst) == Verdict::Holds && relation_holds(b2, inst) != Verdict::Holds) {
      return msg("holds at ", b1, " but not at ", b2, " for ", show(inst));
    }
    if (relation_holds(b2, inst) == Verdict::Fails && relation_holds(b1, inst) != Verdict::Fails) {
      return msg("fails at ", b2, " but not at ", b1, " for ", show(inst));
    }
    return "";
  });
  return s.take();
}

// ---------------------------------------------------------------- witness

std::vector<PropertyOutcome> witness_properties(const PropertyOptions& opts) {
  Suite s("witness-colourings");
  Generator g(opts.seed + 2);

  auto case6 = [&](Instance& inst, NormalizedInstance& norm, Ordinal& p) {
    for (;;) {
      inst = g.countable_instance(3, 1);
      const Normalization n = normalize(inst);
      if (!std::holds_alternative<NormalizedInstance>(n)) continue;
      norm = std::get<NormalizedInstance>(n);
      p = std::get<Exists>(p_top(norm)).value;
      return;
    }
  };

  s.check("every sampled point gets its rank colour", opts.heavy_cases,
          [&](std::size_t) -> std::string {
            Instance inst;
            NormalizedInstance norm;
            Ordinal p;
            case6(inst, norm, p);
            const Ordinal beta = failing_beta(p);
            const Witness w = build_counterexample(beta, norm);
            const RankColouring& col = w.colouring;
            for (int j = 0; j < 20; ++j) {
              const Ordinal x = sample_point(g, col);
              const std::size_t c = eval_colouring(col, x);
              if (c >= col.colour_targets.size()) return msg("colour out of range at ", x);
              if (x.is_zero()) {
                if (c != col.zero_colour) return "point 0 miscoloured";
                continue;
              }
              const Ordinal rank = cb_rank(x);
              if (rank >= col.top_exponent) {
                if (c != col.top_point_colours.at(x.leading_coefficient() - 1)) {
                  return msg("top point ", x, " miscoloured");
                }
                continue;
              }
              bool inside = false;
              for (const Interval& iv : col.rank_classes[c]) inside = inside || (iv.lo <= rank && rank < iv.hi);
              if (!inside) return msg("point ", x, " of rank ", rank, " outside its colour's ranks");
            }
            return "";
          });

  s.check("round trip below the threshold", opts.heavy_cases, [&](std::size_t) -> std::string {
    Instance inst;
    NormalizedInstance norm;
    Ordinal p;
    case6(inst, norm, p);
    Ordinal beta = failing_beta(p);
    if (g.chance(0.5)) {
      const Ordinal other = g.countable(1);
      if (other < p) beta = other;
    }
    const Witness w = build_counterexample(beta, norm);
    if (!verify_certificates(w.colouring, norm, w.certificates)) {
      return msg("certificates rejected for ", show(inst), " at ", beta);
    }
    return "";
  });

  s.check("no witness at or above the threshold", opts.heavy_cases,
          [&](std::size_t) -> std::string {
            Instance inst;
            NormalizedInstance norm;
            Ordinal p;
            case6(inst, norm, p);
            const Ordinal beta = g.chance(0.5) ? p : add(p, g.countable(1));
            try {
              build_counterexample(beta, norm);
            } catch (const Error& e) {
              if (e.kind() == ErrorKind::NotBelowThreshold) return "";
              throw;
            }
            return msg("witness built at ", beta, " >= ", p);
          });

  s.check("natsum_split pieces partition eta", opts.heavy_cases, [&](std::size_t) -> std::string {
    std::vector<Ordinal> parts;
    const std::size_t n = g.uniform(1, 4);
    for (std::size_t i = 0; i < n; ++i) parts.push_back(g.countable(1));
    const Ordinal eta = natural_sum(std::span<const Ordinal>(parts));
    const std::vector<IntervalUnion> pieces = natsum_split(eta, parts);
    if (pieces.size() != parts.size()) return "wrong number of pieces";
    std::vector<Interval> all;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      Ordinal type;
      Ordinal last;
      for (const Interval& iv : pieces[i]) {
        if (!(iv.lo < iv.hi) || iv.lo < last) return "piece intervals out of order";
        type = add(type, left_subtract(iv.lo, iv.hi));
        last = iv.hi;
        all.push_back(iv);
      }
      if (type != parts[i]) return msg("piece ", i, " has type ", type, " not ", parts[i]);
    }
    std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    Ordinal pos;
    for (const Interval& iv : all) {
      if (iv.lo != pos) return msg("gap or overlap at ", pos);
      pos = iv.hi;
    }
    if (pos != eta) return msg("pieces cover up to ", pos, " not ", eta);
    return "";
  });

  s.check("natsum_expressible iff below mr_sum", opts.heavy_cases,
          [&](std::size_t) -> std::string {
            std::vector<Ordinal> bounds;
            const std::size_t n = g.uniform(1, 3);
            for (std::size_t i = 0; i < n; ++i) bounds.push_back(g.positive(1, 2, 2));
            const Ordinal v = mr_sum(std::span<const Ordinal>(bounds));
            for (int j = 0; j < 6; ++j) {
              const Ordinal d = j == 0 ? v : (j == 1 ? add(v, kOne) : draw_near(g, v));
              auto parts = natsum_expressible(d, bounds);
              if (parts.has_value() != (d < v)) return msg("expressibility of ", d, " vs ", v);
              if (parts) {
                std::string why = check_parts(*parts, d, bounds);
                if (!why.empty()) return why;
              }
            }
            return "";
          });
  return s.take();
}

// ---------------------------------------------------------------- oracle

std::vector<PropertyOutcome> oracle_properties(const PropertyOptions& opts) {
  Suite s("brute-oracle");
  Generator g(opts.seed + 3);

  std::vector<std::vector<std::uint64_t>> lists;
  std::function<void(std::vector<std::uint64_t>&, std::uint64_t)> extend =
      [&](std::vector<std::uint64_t>& cur, std::uint64_t sum) {
        if (!cur.empty()) lists.push_back(cur);
        if (cur.size() == 3) return;
        for (std::uint64_t t = 1; sum + t <= 10; ++t) {
          cur.push_back(t);
          extend(cur, sum + t);
          cur.pop_back();
        }
      };
  std::vector<std::uint64_t> cur;
  extend(cur, 0);
  s.exhaust("finite_arrow_check matches the counting threshold", lists.size(),
          [&](std::size_t i) -> std::string {
            const auto& t = lists[i];
            std::uint64_t threshold = 1;
            for (std::uint64_t x : t) threshold += x - 1;
            for (std::uint64_t beta = 0; beta <= threshold + 1; ++beta) {
              if (finite_arrow_check(beta, t) != (beta >= threshold)) {
                return msg("beta = ", beta, " threshold ", threshold);
              }
            }
            return "";
          });

  const std::vector<EnumerationBounds> grids = {
      {Ordinal(2), 3, 2},
      {kOmega, 2, 2},
      {add(kOmega, kOne), 2, 3},
      {omega_pow(Ordinal(2)), 2, 3},
  };
  s.exhaust("enumeration sorted, duplicate-free, within bounds", grids.size(),
          [&](std::size_t i) -> std::string {
            const EnumerationBounds& b = grids[i];
            const std::vector<Ordinal> all = enumerate_ordinals_below(b);
            for (std::size_t j = 1; j < all.size(); ++j) {
              if (!(all[j - 1] < all[j])) return "not strictly increasing";
            }
            for (const Ordinal& x : all) {
              if (!x.is_countable()) return "atom in enumeration";
              if (x.size() > b.max_monomials) return msg(x, " has too many terms");
              for (const Term& t : x.terms()) {
                if (t.coefficient > b.max_coefficient) return msg(x, " coefficient too large");
                if (t.exponent.value() > b.max_exponent) return msg(x, " exponent too large");
              }
              // Closed under dropping the last monomial.
              auto t = x.terms();
              if (!t.empty()) {
                Ordinal head = Ordinal::from_terms({t.begin(), t.end() - 1});
                if (!std::binary_search(all.begin(), all.end(), head)) return msg("missing ", head);
              }
            }
            return "";
          });

  s.check("mr_sum passes the brute-force check, tampering fails", 200,
          [&](std::size_t) -> std::string {
            const std::vector<Ordinal> bounds = {g.with_small_exponents(), g.with_small_exponents()};
            const Ordinal v = mr_sum(std::span<const Ordinal>(bounds));
            if (!mr_sum_bruteforce_check(bounds, v, 50)) return msg("rejects ", v);
            if (mr_sum_bruteforce_check(bounds, add(v, kOne), 50)) return msg("accepts ", v, "+1");
            if (v.is_successor()) {
              auto t = v.terms();
              std::vector<Term> pred(t.begin(), t.end());
              if (--pred.back().coefficient == 0) pred.pop_back();
              if (mr_sum_bruteforce_check(bounds, Ordinal::from_terms(pred), 50)) {
                return msg("accepts ", v, "-1");
              }
            }
            return "";
          });
  return s.take();
}

// ---------------------------------------------------------------- notation

std::vector<PropertyOutcome> notation_properties(const PropertyOptions& opts) {
  Suite s("cli");
  Generator g(opts.seed + 4);
  s.check("format then parse is the identity", opts.cases, [&](std::size_t) -> std::string {
    const Ordinal a = g.with_atoms(2, 4, 9);
    const std::string text = format_ordinal(a);
    const ParsedOrdinal p = parse_ordinal_ex(text);
    if (p.value != a) return msg("round trip fails for ", text);
    if (p.non_canonical) return msg("canonical text flagged: ", text);
    format_ordinal(a, Style::Unicode);
    return "";
  });
  return s.take();
}

std::vector<PropertyOutcome> all_properties(const PropertyOptions& opts) {
  std::vector<PropertyOutcome> out;
  for (auto* suite : {&ordinal_properties, &engine_properties, &witness_properties,
                      &oracle_properties, &notation_properties}) {
    auto part = suite(opts);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace ordpigeon
