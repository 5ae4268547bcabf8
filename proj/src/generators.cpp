#include "ordpigeon/generators.hpp"

#include <algorithm>
#include <iterator>

namespace ordpigeon {

std::uint64_t Generator::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

bool Generator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

std::vector<Ordinal> Generator::exponents(int depth, std::size_t max_terms, bool atoms) {
  const std::size_t n = uniform(0, max_terms);
  std::vector<Ordinal> exps;
  for (std::size_t i = 0; i < n; ++i) {
    if (atoms && chance(0.3)) {
      Ordinal w = Ordinal::initial(Ordinal(uniform(1, 2)));
      switch (uniform(0, 3)) {
        case 0: exps.push_back(w); break;
        case 1: exps.push_back(add(w, Ordinal(uniform(1, 2)))); break;
        case 2: exps.push_back(mul(w, Ordinal(2))); break;
        default: exps.push_back(add(w, countable(0, 2, 2))); break;
      }
    } else if (depth > 0 && chance(0.4)) {
      exps.push_back(atoms ? with_atoms(depth - 1, 2, 2) : countable(depth - 1, 2, 2));
    } else {
      exps.emplace_back(uniform(0, 4));
    }
  }
  return exps;
}

Ordinal Generator::assemble(std::vector<Ordinal> exps, std::uint64_t max_coefficient) {
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Term> terms;
  for (const Ordinal& e : exps) terms.push_back(Term{Exponent::of(e), uniform(1, max_coefficient)});
  return Ordinal::from_terms(std::move(terms));
}

Ordinal Generator::countable(int depth, std::size_t max_terms, std::uint64_t max_coefficient) {
  return assemble(exponents(depth, max_terms, false), max_coefficient);
}

Ordinal Generator::positive(int depth, std::size_t max_terms, std::uint64_t max_coefficient) {
  Ordinal a = countable(depth, max_terms, max_coefficient);
  return a.is_zero() ? Ordinal(uniform(1, max_coefficient)) : a;
}

Ordinal Generator::with_atoms(int depth, std::size_t max_terms, std::uint64_t max_coefficient) {
  return assemble(exponents(depth, max_terms, true), max_coefficient);
}

Ordinal Generator::with_small_exponents(std::size_t max_terms, std::uint64_t max_coefficient) {
  std::vector<Ordinal> exps;
  const std::size_t n = uniform(1, max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    exps.push_back(add(mul(Ordinal::omega(), Ordinal(uniform(0, 2))), Ordinal(uniform(0, 2))));
  }
  return assemble(std::move(exps), max_coefficient);
}

Instance Generator::instance(std::size_t max_entries) {
  const Ordinal w1 = Ordinal::initial(Ordinal(1));
  const Ordinal w2 = Ordinal::initial(Ordinal(2));
  Instance inst;
  if (chance(0.3)) return lopsided_instance(max_entries);
  const std::size_t n = uniform(1, max_entries);
  for (std::size_t i = 0; i < n; ++i) {
    Entry e;
    if (chance(0.55)) {
      e.target = countable(2);
      if (e.target.is_zero() && chance(0.95)) e.target = Ordinal(2);
    } else {
      switch (uniform(0, 7)) {
        case 0: e.target = w1; break;
        case 1: e.target = add(w1, Ordinal(1)); break;
        case 2: e.target = add(mul(w1, Ordinal(2)), Ordinal(5)); break;
        case 3: e.target = w2; break;
        case 4: e.target = add(w1, Ordinal::omega()); break;
        case 5: e.target = add(w2, Ordinal(1)); break;
        case 6: e.target = omega_pow(add(w1, Ordinal(1))); break;
        default: e.target = with_atoms(1); break;
      }
    }
    const std::uint64_t m = uniform(0, 19);
    if (m < 16) {
      e.multiplicity = Cardinal::finite(1 + m % 3);
    } else if (m < 18) {
      e.multiplicity = Cardinal::aleph(Ordinal(0));
    } else {
      e.multiplicity = Cardinal::aleph(Ordinal(1));
    }
    inst.entries.push_back(std::move(e));
  }
  return inst;
}

Instance Generator::lopsided_instance(std::size_t max_entries) {
  const Ordinal w = Ordinal::omega();
  const Ordinal w1 = Ordinal::initial(Ordinal(1));
  const Ordinal w2 = Ordinal::initial(Ordinal(2));
  const Ordinal big[] = {
      add(w1, Ordinal(1)),
      add(mul(w1, Ordinal(2)), Ordinal(5)),
      mul(w1, w),
      add(mul(w1, w), Ordinal(1)),
      mul(w2, w1),
      add(w2, w1),
      add(w2, w),
      mul(w1, Ordinal(3)),
      Ordinal::initial(w),
      add(Ordinal::initial(w), Ordinal(1)),
      omega_pow(add(w1, Ordinal(1))),
      mul(w2, Ordinal(2)),
      omega_pow(add(w2, w1)),
      add(w2, Ordinal(1)),
  };
  const Cardinal counts[] = {Cardinal::finite(1), Cardinal::finite(2), Cardinal::finite(3),
                             Cardinal::aleph(Ordinal(0)), Cardinal::aleph(Ordinal(1)),
                             Cardinal::aleph(Ordinal(2))};
  Instance inst;
  inst.entries.push_back(Entry{big[uniform(0, std::size(big) - 1)], Cardinal::finite(1)});
  const std::size_t n = uniform(0, max_entries - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Ordinal t = chance(0.2) ? w : Ordinal(uniform(1, 5));
    inst.entries.push_back(Entry{t, counts[uniform(0, std::size(counts) - 1)]});
  }
  std::shuffle(inst.entries.begin(), inst.entries.end(), rng_);
  return inst;
}

Instance Generator::countable_instance(std::size_t max_entries, int depth) {
  Instance inst;
  const std::size_t n = uniform(1, max_entries);
  for (std::size_t i = 0; i < n; ++i) {
    Ordinal t = countable(depth);
    if (t < Ordinal(2)) t = Ordinal(uniform(2, 4));
    inst.entries.push_back(Entry{t, Cardinal::finite(uniform(1, 2))});
  }
  return inst;
}

}  // namespace ordpigeon
