#include "ordpigeon/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>

#include "ordpigeon/generators.hpp"
#include "ordpigeon/notation.hpp"
#include "ordpigeon/oracle.hpp"
#include "ordpigeon/pigeonhole.hpp"
#include "ordpigeon/witness.hpp"

namespace ordpigeon {

namespace {

const Ordinal kOne(1);
const Ordinal kOmega = Ordinal::omega();
const Ordinal kOmega1 = Ordinal::initial(Ordinal(1));

Ordinal O(std::string_view s) { return parse_ordinal(s); }

Instance repeat(const Ordinal& target, std::uint64_t k) {
  return Instance{{Entry{target, Cardinal::finite(k)}}};
}

Instance targets(std::initializer_list<Ordinal> list) {
  Instance inst;
  for (const Ordinal& t : list) inst.entries.push_back(Entry{t});
  return inst;
}

std::string show(const Instance& inst) { return format_instance(inst); }

/// Collects failures; the first few become the detail line.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  std::string detail(const std::string& unit) const {
    std::string d = std::to_string(checked) + " " + unit;
    if (failed > 0) d += ", " + std::to_string(failed) + " failed; first: " + first;
    return d;
  }
};

bool is_value(const PigeonholeResult& r, const Ordinal& v) {
  const auto* e = std::get_if<Exists>(&r);
  return e != nullptr && e->value == v;
}

std::string c1(bool& ok) {
  Tally t;
  for (std::uint64_t k = 1; k <= 6; ++k) {
    const Ordinal expected = add(omega_pow(Ordinal(k)), kOne);
    const PigeonholeResult r = p_top(repeat(add(kOmega, kOne), k));
    t.expect(is_value(r, expected), "k = " + std::to_string(k) + " gave " + format_result(r));
  }
  ok = t.failed == 0;
  return t.detail("values of k");
}

std::string c2(bool& ok) {
  Tally t;
  for (const Ordinal& a : {Ordinal(0), Ordinal(1), Ordinal(2), kOmega}) {
    for (std::uint64_t m = 0; m <= 3; ++m) {
      const Ordinal target = omega_pow(mul(omega_pow(a), Ordinal(m + 1)));
      const Ordinal expected = omega_pow(mul(omega_pow(a), Ordinal(2 * m + 1)));
      const PigeonholeResult r = p_top(repeat(target, 2));
      t.expect(is_value(r, expected), format_ordinal(target) + " x 2 gave " + format_result(r));
    }
  }
  ok = t.failed == 0;
  return t.detail("(a, m) pairs");
}

std::string c3(bool& ok) {
  const std::vector<Ordinal> all =
      enumerate_ordinals_below({omega_pow(Ordinal(2)), 2, 3});
  Tally t;
  std::size_t fixed = 0;
  for (const Ordinal& a : all) {
    if (a < Ordinal(2)) continue;
    // a = w^(w^b) exactly when a is a power of w whose exponent is a power of w.
    bool shape = false;
    if (is_power_of_omega(a) && !a.is_finite()) {
      const Ordinal e = a.leading_exponent().value();
      shape = e == kOne || (!e.is_finite() && is_power_of_omega(e));
    }
    const bool self = is_value(p_top(repeat(a, 2)), a);
    fixed += self ? 1 : 0;
    t.expect(self == shape, format_ordinal(a) + (self ? " arrows itself" : " does not arrow itself"));
  }
  ok = t.failed == 0 && fixed > 0;
  return t.detail("ordinals") + ", " + std::to_string(fixed) + " of the form w^w^b";
}

std::string c4(bool& ok) {
  Generator g(4);
  Tally t;
  std::size_t tampered = 0;
  for (int i = 0; i < 200; ++i) {
    const std::vector<Ordinal> bounds = {g.with_small_exponents(), g.with_small_exponents()};
    const Ordinal v = mr_sum(std::span<const Ordinal>(bounds));
    const std::string tag = "[" + format_ordinal(bounds[0]) + ", " + format_ordinal(bounds[1]) + "]";
    t.expect(mr_sum_bruteforce_check(bounds, v, 50), tag + " rejects " + format_ordinal(v));
    t.expect(!mr_sum_bruteforce_check(bounds, add(v, kOne), 50), tag + " accepts +1");
    ++tampered;
    if (v.is_successor()) {
      auto terms = v.terms();
      std::vector<Term> pred(terms.begin(), terms.end());
      if (--pred.back().coefficient == 0) pred.pop_back();
      t.expect(!mr_sum_bruteforce_check(bounds, Ordinal::from_terms(pred), 50),
               tag + " accepts -1");
      ++tampered;
    }
  }
  ok = t.failed == 0;
  return t.detail("checks") + " (" + std::to_string(tampered) + " tampered)";
}

std::string c5(bool& ok) {
  Tally t;
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t)> walk = [&](std::uint64_t sum) {
    if (!cur.empty()) {
      std::uint64_t formula = 1;
      Instance inst;
      for (std::uint64_t n : cur) {
        formula += n - 1;
        inst.entries.push_back(Entry{Ordinal(n)});
      }
      // Least beta accepted by exhaustive search.
      std::uint64_t least = 0;
      while (!finite_arrow_check(least, cur)) ++least;
      const PigeonholeResult r = p_top(inst);
      t.expect(least == formula && is_value(r, Ordinal(formula)),
               show(inst) + ": search " + std::to_string(least) + ", p_top " + format_result(r));
    }
    if (cur.size() == 3) return;
    for (std::uint64_t n = 1; sum + n <= 10; ++n) {
      cur.push_back(n);
      walk(sum + n);
      cur.pop_back();
    }
  };
  walk(0);
  ok = t.failed == 0;
  return t.detail("target lists");
}

std::vector<Instance> subfamily_grid() {
  Generator g(6);
  std::vector<Instance> grid;
  auto exps = [&] {
    std::vector<Ordinal> e;
    const std::size_t k = g.uniform(1, 3);
    for (std::size_t i = 0; i < k; ++i) e.push_back(g.positive(1, 2, 2));
    return e;
  };
  for (int i = 0; i < 25; ++i) {
    Instance inst;
    for (const Ordinal& a : exps()) inst.entries.push_back(Entry{add(omega_pow(a), kOne)});
    grid.push_back(inst);
  }
  for (int i = 0; i < 25; ++i) {
    Instance inst;
    for (const Ordinal& a : exps()) inst.entries.push_back(Entry{omega_pow(a)});
    grid.push_back(inst);
  }
  for (int i = 0; i < 25; ++i) {
    Instance inst;
    for (const Ordinal& a : exps()) {
      inst.entries.push_back(Entry{g.chance(0.5) ? omega_pow(a) : add(omega_pow(a), kOne)});
    }
    inst.entries.push_back(Entry{omega_pow(g.positive(1, 2, 2))});
    grid.push_back(inst);
  }
  for (int i = 0; i < 25; ++i) {
    Instance inst;
    for (const Ordinal& a : exps()) {
      inst.entries.push_back(Entry{add(mul(omega_pow(a), Ordinal(g.uniform(1, 3))), kOne)});
    }
    if (g.chance(0.5)) inst.entries.push_back(Entry{Ordinal(g.uniform(2, 5))});
    grid.push_back(inst);
  }
  return grid;
}

std::string c6(bool& ok) {
  const CrossCheckReport report = cross_check_p_top(subfamily_grid());
  ok = report.mismatches.empty() && report.checked == 100;
  std::string d = std::to_string(report.checked) + " checked, " +
                  std::to_string(report.skipped) + " skipped, " +
                  std::to_string(report.mismatches.size()) + " mismatches";
  if (!report.mismatches.empty()) {
    const CrossCheckMismatch& m = report.mismatches.front();
    d += "; first: " + show(m.instance) + " expected " + format_ordinal(m.expected) + " got " +
         format_result(m.actual);
  }
  return d;
}

std::vector<Instance> witness_grid() {
  std::vector<Instance> grid = {
      targets({O("3"), O("4")}),
      targets({O("2"), O("2"), O("5")}),
      repeat(O("w+1"), 3),
      targets({O("w*2+1"), O("w*3+1")}),
      targets({O("w^2*2"), O("w*2+1")}),
      targets({O("w+1"), O("5")}),
      repeat(O("w*2"), 2),
      targets({O("w*2"), O("w+1")}),
      targets({O("w^2*3"), O("w^2+1")}),
      targets({O("w"), O("w*2")}),
      targets({O("w^w"), O("w^2")}),
      repeat(O("w^2"), 2),
      targets({O("w^2"), O("3")}),
      targets({O("w^(w+1)"), O("w*2+1")}),
      targets({O("w^w*2+w^3"), O("w^w+w")}),
  };
  Generator g(7);
  while (grid.size() < 50) grid.push_back(g.countable_instance(3, 1));
  return grid;
}

/// Every single-field change of a certificate, plus reassigning a top point.
std::vector<Witness> tamperings(const Witness& w) {
  std::vector<Witness> out;
  const std::size_t colours = w.colouring.colour_targets.size();
  for (std::size_t i = 0; i < w.certificates.size(); ++i) {
    auto with = [&](auto change) {
      Witness t = w;
      change(t.certificates[i]);
      out.push_back(std::move(t));
    };
    if (colours > 1) {
      with([&](ObstructionCertificate& c) { c.colour = (c.colour + 1) % colours; });
    }
    with([&](ObstructionCertificate& c) { c.claimed_target = add(c.claimed_target, kOne); });
    const CertificateKind& kind = w.certificates[i].kind;
    if (const auto* k = std::get_if<DerivativeEmpty>(&kind)) {
      with([&](ObstructionCertificate& c) { c.kind = DerivativeSmall{k->level, 1}; });
      with([&](ObstructionCertificate& c) { c.kind = DerivativeEmpty{add(k->level, kOne)}; });
    } else if (const auto* k = std::get_if<DerivativeSmall>(&kind)) {
      with([&](ObstructionCertificate& c) { c.kind = DerivativeEmpty{k->level}; });
      with([&](ObstructionCertificate& c) {
        c.kind = DerivativeSmall{add(k->level, kOne), k->bound};
      });
      with([&](ObstructionCertificate& c) { c.kind = DerivativeSmall{k->level, k->bound + 1}; });
      with([&](ObstructionCertificate& c) { c.kind = DerivativeSmall{k->level, k->bound - 1}; });
    } else if (const auto* k = std::get_if<DerivativeNotEmbeddable>(&kind)) {
      with([&](ObstructionCertificate& c) { c.kind = DerivativeEmpty{k->level}; });
      with([&](ObstructionCertificate& c) {
        c.kind = DerivativeNotEmbeddable{add(k->level, kOne), k->class_residual, k->target_residual};
      });
      with([&](ObstructionCertificate& c) {
        c.kind = DerivativeNotEmbeddable{k->level, add(k->class_residual, kOne), k->target_residual};
      });
      with([&](ObstructionCertificate& c) {
        c.kind = DerivativeNotEmbeddable{k->level, k->class_residual, add(k->target_residual, kOne)};
      });
    } else {
      with([&](ObstructionCertificate& c) { c.kind = DerivativeEmpty{Ordinal()}; });
    }
  }
  if (colours > 1 && !w.colouring.top_point_colours.empty()) {
    Witness t = w;
    t.colouring.top_point_colours[0] = (t.colouring.top_point_colours[0] + 1) % colours;
    out.push_back(std::move(t));
  }
  return out;
}

std::string c7(bool& ok) {
  Tally t;
  std::size_t mutants = 0;
  std::map<std::string, int> paths;
  for (const Instance& inst : witness_grid()) {
    const NormalizedInstance norm = std::get<NormalizedInstance>(normalize(inst));
    const Ordinal p = std::get<Exists>(p_top(norm)).value;
    ++paths[to_string(classify_case(norm))];
    const Ordinal beta = failing_beta(p);
    const std::string tag = show(inst) + " at " + format_ordinal(beta);
    Witness w;
    try {
      w = build_counterexample(beta, norm);
    } catch (const std::exception& e) {
      t.expect(false, tag + ": " + e.what());
      continue;
    }
    t.expect(verify_certificates(w.colouring, norm, w.certificates), tag + " rejected");
    for (const Witness& m : tamperings(w)) {
      ++mutants;
      t.expect(!verify_certificates(m.colouring, norm, m.certificates),
               tag + ": tampered witness accepted");
    }
  }
  ok = t.failed == 0;
  std::string d = t.detail("checks") + " (" + std::to_string(mutants) + " tampered;";
  for (const auto& [path, n] : paths) d += " " + path + "=" + std::to_string(n);
  return d + ")";
}

std::string c8(bool& ok) {
  Tally t;
  t.expect(p_top(targets({O("w_1+1"), O("w+1")})) == PigeonholeResult(Infinite{}),
           "(w_1+1, w+1) is not infinite");
  for (std::uint64_t n : {2, 17}) {
    const PigeonholeResult r = p_top(targets({kOmega1, Ordinal(n)}));
    t.expect(is_value(r, kOmega1), "(w_1, " + std::to_string(n) + ") gave " + format_result(r));
  }
  const PigeonholeResult r5 = p_top(Instance{{Entry{Ordinal(2), Cardinal::aleph(Ordinal(0))}}});
  t.expect(is_value(r5, kOmega1), "2:aleph_0 gave " + format_result(r5));
  const PigeonholeResult r3 = p_top(repeat(kOmega1, 2));
  const auto* ind = std::get_if<Independent>(&r3);
  t.expect(ind != nullptr && ind->zfc_lower == Ordinal::initial(Ordinal(2)) &&
               ind->consistent_infinite.find("Prikry") != std::string::npos &&
               ind->consistent_equal_lower.find("supercompact") != std::string::npos &&
               ind->equiconsistency.find("Mahlo") != std::string::npos,
           "w_1:2 gave " + format_result(r3));
  ok = t.failed == 0;
  return t.detail("instances");
}

std::string c9(bool& ok, const PropertyOptions& opts) {
  const std::vector<PropertyOutcome> all = all_properties(opts);
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::string first;
  bool enough = true;
  for (const PropertyOutcome& o : all) {
    cases += o.cases;
    if (!o.passed() && failed++ == 0) first = o.suite + " / " + o.name + ": " + o.first_failure;
    // Algebra laws and case-tree properties need 10^4 cases each.
    if ((o.suite == "ordinal-core" || o.suite == "pigeonhole-engine") && !o.exhaustive &&
        o.cases < 10000) {
      enough = false;
    }
  }
  ok = failed == 0 && enough;
  std::string d = std::to_string(all.size()) + " properties, " + std::to_string(cases) + " cases";
  if (!enough) d += ", fewer than 10^4 cases for some law";
  if (failed > 0) d += ", " + std::to_string(failed) + " failed; first: " + first;
  return d;
}

struct Criterion {
  int id;
  const char* title;
  double budget;
};

constexpr Criterion kCriteria[] = {
    {1, "(w+1) x k regression table", 1},
    {2, "Baumgartner family", 1},
    {3, "self-arrow exactly at w^w^b", 10},
    {4, "Milner-Rado brute-force equivalence", 60},
    {5, "finite pigeonhole equivalence", 120},
    {6, "sub-family formula cross-check", 30},
    {7, "case 6 witness round trip", 30},
    {8, "uncountable and independent instances", 1},
    {9, "property suites", 300},
};

}  // namespace

std::vector<CriterionOutcome> run_acceptance(
    const AcceptanceOptions& opts, const std::function<void(const CriterionOutcome&)>& report) {
  std::vector<CriterionOutcome> out;
  for (const Criterion& c : kCriteria) {
    if (!opts.only.empty() &&
        std::find(opts.only.begin(), opts.only.end(), c.id) == opts.only.end()) {
      continue;
    }
    CriterionOutcome o{c.id, c.title, false, "", 0, c.budget};
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      switch (c.id) {
        case 1: o.detail = c1(ok); break;
        case 2: o.detail = c2(ok); break;
        case 3: o.detail = c3(ok); break;
        case 4: o.detail = c4(ok); break;
        case 5: o.detail = c5(ok); break;
        case 6: o.detail = c6(ok); break;
        case 7: o.detail = c7(ok); break;
        case 8: o.detail = c8(ok); break;
        default: o.detail = c9(ok, opts.properties); break;
      }
    } catch (const std::exception& e) {
      ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    o.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.passed = ok && o.seconds < o.budget_seconds;
    if (ok && !o.passed) o.detail += ", over time budget";
    if (report) report(o);
    out.push_back(std::move(o));
  }
  return out;
}

std::string format_outcome(const CriterionOutcome& o) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2f s, budget %g s)", o.seconds, o.budget_seconds);
  return std::string(o.passed ? "PASS" : "FAIL") + "  " + std::to_string(o.id) + "  " + o.title +
         ": " + o.detail + "  " + timing;
}

}  // namespace ordpigeon
