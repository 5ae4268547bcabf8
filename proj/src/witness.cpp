#include "ordpigeon/witness.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace ordpigeon {

namespace {

const Ordinal kOmega = Ordinal::omega();
const Ordinal kOmega1 = Ordinal::initial(Ordinal(1));

// ------------------------------------------------------- natural-sum search

class SplitSearch {
 public:
  SplitSearch(const Ordinal& delta, const std::vector<Ordinal>& bounds) : k_(bounds.size()) {
    for (const Term& t : delta.terms()) exps_.push_back(t.exponent);
    for (const Ordinal& b : bounds) {
      for (const Term& t : b.terms()) exps_.push_back(t.exponent);
    }
    std::sort(exps_.begin(), exps_.end(), std::greater<>());
    exps_.erase(std::unique(exps_.begin(), exps_.end()), exps_.end());
    delta_.assign(exps_.size(), 0);
    bound_.assign(k_, std::vector<std::uint64_t>(exps_.size(), 0));
    alloc_.assign(k_, std::vector<std::uint64_t>(exps_.size(), 0));
    for (const Term& t : delta.terms()) delta_[index(t.exponent)] = t.coefficient;
    for (std::size_t i = 0; i < k_; ++i) {
      for (const Term& t : bounds[i].terms()) bound_[i][index(t.exponent)] = t.coefficient;
    }
  }

  std::optional<std::vector<Ordinal>> run() {
    std::vector<bool> less(k_, false);
    if (!level(0, less)) return std::nullopt;
    std::vector<Ordinal> out;
    for (std::size_t i = 0; i < k_; ++i) {
      std::vector<Term> terms;
      for (std::size_t e = 0; e < exps_.size(); ++e) {
        if (alloc_[i][e] > 0) terms.push_back(Term{exps_[e], alloc_[i][e]});
      }
      out.push_back(Ordinal::from_terms(std::move(terms)));
    }
    return out;
  }

 private:
  std::size_t index(const Exponent& e) const {
    return static_cast<std::size_t>(
        std::lower_bound(exps_.begin(), exps_.end(), e, std::greater<>()) - exps_.begin());
  }

  bool bound_has_mass_from(std::size_t i, std::size_t e) const {
    for (std::size_t j = e; j < exps_.size(); ++j) {
      if (bound_[i][j] > 0) return true;
    }
    return false;
  }

  void clear_from(std::size_t e) {
    for (auto& row : alloc_) std::fill(row.begin() + static_cast<std::ptrdiff_t>(e), row.end(), 0);
  }

  bool level(std::size_t e, std::vector<bool>& less) {
    if (e == exps_.size()) {
      return std::all_of(less.begin(), less.end(), [](bool b) { return b; });
    }
    // A part already strictly below its bound can absorb everything left.
    for (std::size_t p = 0; p < k_; ++p) {
      if (!less[p]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < k_ && ok; ++q) ok = less[q] || bound_has_mass_from(q, e);
      if (ok) {
        clear_from(e);
        for (std::size_t j = e; j < exps_.size(); ++j) alloc_[p][j] = delta_[j];
        return true;
      }
      break;
    }
    return distribute(e, 0, delta_[e], less);
  }

  bool distribute(std::size_t e, std::size_t part, std::uint64_t remaining,
                  std::vector<bool>& less) {
    if (part + 1 == k_) return place(e, part, remaining, less, [&] { return level(e + 1, less); });
    for (std::uint64_t x = 0; x <= remaining; ++x) {
      if (!less[part] && x > bound_[part][e]) break;
      if (place(e, part, x, less, [&] { return distribute(e, part + 1, remaining - x, less); })) {
        return true;
      }
    }
    return false;
  }

  template <typename Next>
  bool place(std::size_t e, std::size_t part, std::uint64_t x, std::vector<bool>& less,
             Next next) {
    const bool was_less = less[part];
    if (!was_less && x > bound_[part][e]) return false;
    alloc_[part][e] = x;
    less[part] = was_less || x < bound_[part][e];
    bool ok = next();
    less[part] = was_less;
    return ok;
  }

  std::size_t k_;
  std::vector<Exponent> exps_;
  std::vector<std::uint64_t> delta_;
  std::vector<std::vector<std::uint64_t>> bound_;
  std::vector<std::vector<std::uint64_t>> alloc_;
};

// ------------------------------------------------------- interval helpers

IntervalUnion sorted_merged(IntervalUnion u) {
  std::sort(u.begin(), u.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalUnion out;
  for (const Interval& iv : u) {
    if (!out.empty() && out.back().hi == iv.lo) {
      out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

/// Number of points w^alpha * l (l >= 1) below domain; for alpha = 0 these
/// are the points 1, ..., domain-1.
std::optional<std::uint64_t> top_point_count(const Ordinal& domain, const Ordinal& alpha) {
  Ordinal t;
  if (alpha.is_zero()) {
    t = domain.is_zero() ? Ordinal() : left_subtract(Ordinal(1), domain);
  } else {
    t = derived_order_type(domain, alpha);
  }
  if (!t.is_finite()) return std::nullopt;
  return t.finite_value();
}

/// The alpha-th derived set of the space `target`, as an ordinal.
Ordinal derived_space(const Ordinal& target, const Ordinal& level) {
  return level.is_zero() ? target : derived_order_type(target, level);
}

bool larger_than(const Ordinal& size, std::uint64_t bound) {
  return !size.is_finite() || size.finite_value() > bound;
}

std::vector<Ordinal> expand_targets(const NormalizedInstance& norm) {
  std::vector<Ordinal> out;
  for (const Entry& e : norm.entries) {
    for (std::uint64_t j = 0; j < e.multiplicity.count(); ++j) out.push_back(e.target);
  }
  return out;
}

std::size_t rank_zero_owner(const std::vector<IntervalUnion>& pieces) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const Interval& iv : pieces[i]) {
      if (iv.lo.is_zero()) return i;
    }
  }
  throw std::logic_error("no piece contains rank 0");
}

ObstructionCertificate count_certificate(std::size_t colour, const Ordinal& target,
                                         const Ordinal& level, std::uint64_t exceptions) {
  if (exceptions == 0) return {colour, DerivativeEmpty{level}, target};
  return {colour, DerivativeSmall{level, exceptions}, target};
}

// ------------------------------------------------------- constructions

Witness cofinality_witness(const Ordinal& beta, const NormalizedInstance& norm) {
  const Ordinal big = add(kOmega1, Ordinal(1));
  const Ordinal mid = add(kOmega, Ordinal(1));
  const Entry* r = nullptr;
  for (const Entry& e : norm.entries) {
    if (e.target >= big) {
      r = &e;
      break;
    }
  }
  const Entry* s = nullptr;
  if (r->multiplicity >= Cardinal::finite(2)) {
    s = r;
  } else {
    for (const Entry& e : norm.entries) {
      if (&e != r && e.target >= mid) {
        s = &e;
        break;
      }
    }
  }
  Witness w;
  w.colouring.mode = ColouringMode::Cofinality;
  w.colouring.domain = beta;
  w.colouring.colour_targets = {r->target, s->target};
  w.certificates = {{0, CofinalitySplit{}, r->target}, {1, CofinalitySplit{}, s->target}};
  return w;
}

/// Colour i takes the ranks of a piece of type parts[i]; the top points and
/// (when alpha = 0) the point 0 are spread with at most capacity[i] per colour.
Witness counting_witness(const Ordinal& beta, const std::vector<Ordinal>& targets,
                         const Ordinal& alpha, const std::vector<Ordinal>& parts,
                         const std::vector<std::uint64_t>& capacity) {
  Witness w;
  RankColouring& col = w.colouring;
  col.domain = beta;
  col.top_exponent = alpha;
  col.colour_targets = targets;
  col.rank_classes = natsum_split(alpha, parts);

  std::vector<std::uint64_t> used(targets.size(), 0);
  auto next_colour = [&]() -> std::size_t {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (used[i] < capacity[i]) {
        ++used[i];
        return i;
      }
    }
    throw std::logic_error("counting colouring out of capacity");
  };
  if (alpha.is_zero()) {
    col.zero_colour = beta.is_zero() ? 0 : next_colour();
  } else {
    col.zero_colour = rank_zero_owner(col.rank_classes);
  }
  const std::uint64_t tops = *top_point_count(beta, alpha);
  for (std::uint64_t l = 0; l < tops; ++l) col.top_point_colours.push_back(next_colour());

  for (std::size_t i = 0; i < targets.size(); ++i) {
    w.certificates.push_back(count_certificate(i, targets[i], parts[i], used[i]));
  }
  return w;
}

Witness distinguishing_witness(const Ordinal& beta, const std::vector<Ordinal>& targets,
                               const std::vector<Case6Decomposition>& parts, std::size_t s,
                               const Ordinal& B) {
  // Hand out blocks with s last so that the final rank block belongs to s.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != s) order.push_back(i);
  }
  order.push_back(s);
  std::vector<Ordinal> reordered;
  for (std::size_t i : order) reordered.push_back(parts[i].beta);
  std::vector<IntervalUnion> split = natsum_split(B, reordered);

  Witness w;
  RankColouring& col = w.colouring;
  col.domain = beta;
  col.top_exponent = B;
  col.colour_targets = targets;
  col.rank_classes.resize(parts.size());
  for (std::size_t j = 0; j < order.size(); ++j) col.rank_classes[order[j]] = split[j];
  col.zero_colour = rank_zero_owner(col.rank_classes);
  col.top_point_colours.assign(*top_point_count(beta, B), s);

  const IntervalUnion& mine = col.rank_classes[s];
  const Ordinal& a = mine.back().lo;
  const Ordinal level = order_type(IntervalUnion(mine.begin(), mine.end() - 1));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == s) {
      w.certificates.push_back(
          {s,
           DerivativeNotEmbeddable{level, biembed_canonical(derived_order_type(beta, a)),
                                   biembed_canonical(derived_order_type(targets[s], level))},
           targets[s]});
    } else {
      w.certificates.push_back({i, DerivativeEmpty{parts[i].beta}, targets[i]});
    }
  }
  return w;
}

Witness multiples_witness(const Ordinal& beta, const std::vector<Ordinal>& targets,
                          CasePath path) {
  std::vector<Case6Decomposition> parts;
  std::vector<Ordinal> betas;
  std::vector<std::uint64_t> capacity;
  Ordinal B;
  std::uint64_t M = 1;
  for (const Ordinal& t : targets) {
    parts.push_back(case6_decompose(t));
    betas.push_back(parts.back().beta);
    capacity.push_back(parts.back().m - 1);
    B = natural_sum(B, parts.back().beta);
    M += parts.back().m - 1;
  }
  // The counting colouring handles every beta with at most M-1 exceptional
  // points; above that only the distinguishing colouring remains.
  auto tops = top_point_count(beta, B);
  const std::uint64_t exceptional = (B.is_zero() && !beta.is_zero()) ? 1 : 0;
  if (tops && *tops + exceptional <= M - 1) {
    return counting_witness(beta, targets, B, betas, capacity);
  }
  if (path != CasePath::C6cI) throw std::logic_error("beta above the counting range");
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (!parts[s].exact_multiple) continue;
    bool ok = true;
    for (std::size_t i = 0; i < parts.size() && ok; ++i) {
      ok = cb_rank(parts[s].beta) <= cb_rank(parts[i].beta) && (i == s || parts[i].m == 1);
    }
    if (ok) return distinguishing_witness(beta, targets, parts, s, B);
  }
  throw std::logic_error("distinguished colour not found");
}

Witness power_witness(const Ordinal& beta, const std::vector<Ordinal>& targets) {
  const Ordinal eta = beta.is_finite() ? Ordinal() : beta.leading_exponent().value();
  std::vector<Ordinal> bounds;
  for (const Ordinal& t : targets) bounds.push_back(minimal_omega_power_bound(t));
  auto tilde = natsum_expressible(eta, bounds);
  if (!tilde) throw std::logic_error("rank of beta not expressible below the bounds");
  std::size_t p = 0;
  while (!is_power_of_omega(targets[p])) ++p;
  // Powers of w have infinite derivatives below their exponent, so colour p
  // can take every exceptional point.
  std::vector<std::uint64_t> capacity(targets.size(), 0);
  capacity[p] = std::numeric_limits<std::uint64_t>::max();
  return counting_witness(beta, targets, eta, *tilde, capacity);
}

}  // namespace

// ---------------------------------------------------------------- public

std::optional<std::vector<Ordinal>> natsum_expressible(const Ordinal& delta,
                                                       const std::vector<Ordinal>& bounds) {
  for (const Ordinal& b : bounds) {
    if (b.is_zero()) return std::nullopt;
  }
  if (bounds.empty()) return std::nullopt;
  return SplitSearch(delta, bounds).run();
}

std::vector<IntervalUnion> natsum_split(const Ordinal& eta, const std::vector<Ordinal>& parts) {
  if (natural_sum(std::span<const Ordinal>(parts)) != eta) {
    throw Error(ErrorKind::PreconditionViolated, "parts do not natural-sum to eta");
  }
  std::vector<IntervalUnion> pieces(parts.size());
  Ordinal pos;
  for (const Term& t : eta.terms()) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (const Term& pt : parts[i].terms()) {
        if (!(pt.exponent == t.exponent)) continue;
        Ordinal next = add(pos, Ordinal::from_terms({Term{t.exponent, pt.coefficient}}));
        if (!pieces[i].empty() && pieces[i].back().hi == pos) {
          pieces[i].back().hi = next;
        } else {
          pieces[i].push_back(Interval{pos, next});
        }
        pos = next;
      }
    }
  }
  return pieces;
}

Ordinal order_type(const IntervalUnion& u) {
  Ordinal total;
  for (const Interval& iv : sorted_merged(u)) total = add(total, left_subtract(iv.lo, iv.hi));
  return total;
}

Ordinal failing_beta(const Ordinal& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "no ordinal below 0");
  if (p.is_finite()) return Ordinal(p.finite_value() - 1);
  auto t = p.terms();
  if (p.is_successor()) {
    return Ordinal::from_terms({t.begin(), t.end() - 1});
  }
  if (t.size() == 1 && t[0].coefficient >= 2) {
    return add(Ordinal::from_terms({Term{t[0].exponent, t[0].coefficient - 1}}), Ordinal(1));
  }
  if (!is_power_of_omega(p)) {
    throw Error(ErrorKind::PreconditionViolated, "not of the form w^g*m or w^g*m+1");
  }
  // e = h-1 for successor h, else h with its last monomial w^f*c
  // replaced by w^f*(c-1) + 2.
  const Ordinal h = p.leading_exponent().value();
  auto ht = h.terms();
  std::vector<Term> head(ht.begin(), ht.end());
  if (--head.back().coefficient == 0) head.pop_back();
  Ordinal e = Ordinal::from_terms(std::move(head));
  if (!h.is_successor()) e = add(e, Ordinal(2));
  return add(mul(omega_pow(e), Ordinal(2)), Ordinal(1));
}

Witness build_counterexample(const Ordinal& beta, const NormalizedInstance& norm) {
  const PigeonholeResult result = p_top(norm);
  if (relation_holds(beta, result) == Verdict::Holds) {
    throw Error(ErrorKind::NotBelowThreshold, "beta already satisfies the partition relation");
  }
  const CasePath path = classify_case(norm);
  switch (path) {
    case CasePath::C1:
      return cofinality_witness(beta, norm);
    case CasePath::C6a:
    case CasePath::C6cI:
    case CasePath::C6cII:
      return multiples_witness(beta, expand_targets(norm), path);
    case CasePath::C6b:
      return power_witness(beta, expand_targets(norm));
    default:
      throw Error(ErrorKind::OutOfScope,
                  std::string("no finitely described witness for case ") + to_string(path));
  }
}

std::size_t eval_colouring(const RankColouring& col, const Ordinal& x) {
  if (x >= col.domain) throw Error(ErrorKind::OutOfDomain, "point outside the coloured space");
  if (col.mode == ColouringMode::Cofinality) return cofinality(x) >= kOmega1 ? 1 : 0;
  if (x.is_zero()) return col.zero_colour;
  const Ordinal rank = cb_rank(x);
  if (rank >= col.top_exponent) {
    const std::uint64_t l = x.leading_coefficient();
    if (l == 0 || l > col.top_point_colours.size()) {
      throw Error(ErrorKind::OutOfDomain, "top point without an assigned colour");
    }
    return col.top_point_colours[l - 1];
  }
  for (std::size_t i = 0; i < col.rank_classes.size(); ++i) {
    for (const Interval& iv : col.rank_classes[i]) {
      if (iv.lo <= rank && rank < iv.hi) return i;
    }
  }
  throw Error(ErrorKind::OutOfDomain, "rank not covered by any colour");
}

bool verify_certificates(const RankColouring& col, const NormalizedInstance& norm,
                         const std::vector<ObstructionCertificate>& certs) {
  const std::size_t c = col.colour_targets.size();
  if (c == 0) return false;

  // Colours must name distinct indices of the instance.
  std::map<Ordinal, std::uint64_t> demand;
  for (const Ordinal& t : col.colour_targets) ++demand[t];
  for (const auto& [target, n] : demand) {
    Cardinal available = Cardinal::finite(0);
    for (const Entry& e : norm.entries) {
      if (e.target == target) available = card_add(available, e.multiplicity);
    }
    if (available < Cardinal::finite(n)) return false;
  }

  if (certs.size() != c) return false;
  std::vector<bool> seen(c, false);
  for (const ObstructionCertificate& cert : certs) {
    if (cert.colour >= c || seen[cert.colour]) return false;
    seen[cert.colour] = true;
    if (cert.claimed_target != col.colour_targets[cert.colour]) return false;
  }

  if (col.mode == ColouringMode::Cofinality) {
    if (c != 2 || !col.rank_classes.empty() || !col.top_point_colours.empty()) return false;
    for (const ObstructionCertificate& cert : certs) {
      if (!std::holds_alternative<CofinalitySplit>(cert.kind)) return false;
    }
    return col.colour_targets[0] >= add(kOmega1, Ordinal(1)) &&
           col.colour_targets[1] >= add(kOmega, Ordinal(1));
  }

  const Ordinal& alpha = col.top_exponent;
  if (col.rank_classes.size() != c) return false;
  if (!(col.domain < omega_pow(add(alpha, Ordinal(1))))) return false;

  // Rank intervals partition [0, alpha).
  std::vector<std::pair<Interval, std::size_t>> all;
  for (std::size_t i = 0; i < c; ++i) {
    for (const Interval& iv : col.rank_classes[i]) {
      if (!(iv.lo < iv.hi)) return false;
      all.push_back({iv, i});
    }
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
  Ordinal pos;
  for (const auto& [iv, colour] : all) {
    if (iv.lo != pos) return false;
    pos = iv.hi;
  }
  if (pos != alpha) return false;

  const auto tops = top_point_count(col.domain, alpha);
  if (!tops || col.top_point_colours.size() != *tops) return false;
  if (col.zero_colour >= c) return false;
  std::vector<std::uint64_t> exceptions(c, 0);
  for (std::size_t colour : col.top_point_colours) {
    if (colour >= c) return false;
    ++exceptions[colour];
  }
  if (!col.domain.is_zero()) {
    const bool zero_in_rank_class =
        !all.empty() && all.front().second == col.zero_colour;
    if (!zero_in_rank_class) ++exceptions[col.zero_colour];
  }

  for (const ObstructionCertificate& cert : certs) {
    const std::size_t i = cert.colour;
    const IntervalUnion ranks = sorted_merged(col.rank_classes[i]);
    const Ordinal tau = order_type(ranks);
    const Ordinal& target = cert.claimed_target;
    bool ok = std::visit(
        [&](const auto& k) -> bool {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, DerivativeEmpty>) {
            return k.level == tau && exceptions[i] == 0 &&
                   larger_than(derived_space(target, k.level), 0);
          } else if constexpr (std::is_same_v<K, DerivativeSmall>) {
            return k.level == tau && k.bound >= 1 && k.bound == exceptions[i] &&
                   larger_than(derived_space(target, k.level), k.bound);
          } else if constexpr (std::is_same_v<K, DerivativeNotEmbeddable>) {
            // Everything of colour i at derivative level k.level has rank at
            // least a, where [a, alpha) is the last block of the colour's ranks.
            if (ranks.empty() || ranks.back().hi != alpha) return false;
            const Ordinal& a = ranks.back().lo;
            if (k.level != order_type(IntervalUnion(ranks.begin(), ranks.end() - 1))) return false;
            // At level 0 the isolated point 0 is still present.
            if (k.level.is_zero() && !a.is_zero() && col.zero_colour == i) return false;
            const Ordinal g = left_subtract(a, alpha);
            if (k.class_residual != biembed_canonical(derived_order_type(col.domain, a))) {
              return false;
            }
            if (k.target_residual != biembed_canonical(derived_order_type(target, k.level))) {
              return false;
            }
            const Exponent eg = Exponent::of(g);
            auto cr = k.class_residual.terms();
            auto tr = k.target_residual.terms();
            return cr.size() == 2 && cr[0].exponent == eg && cr[1] == Term{Exponent(), 1} &&
                   tr.size() == 1 && tr[0].exponent == eg &&
                   tr[0].coefficient > cr[0].coefficient;
          } else {
            return false;
          }
        },
        cert.kind);
    if (!ok) return false;
  }
  return true;
}

}  // namespace ordpigeon
