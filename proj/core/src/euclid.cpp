#include "lorder/euclid.hpp"

#include <functional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lorder/canonical.hpp"
#include "lorder/expr.hpp"
#include "lorder/invariants.hpp"

namespace lorder {

namespace {

using Seq = std::vector<Node>;

Tree3S tree_of(Seq s) { return Tree3S::adopt(Node{Sign::Zero, std::move(s)}); }

Seq cat(const Seq& a, const Seq& b) {
  Seq out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Seq range(const Seq& s, std::size_t b, std::size_t e) {
  return Seq(s.begin() + static_cast<std::ptrdiff_t>(b),
             s.begin() + static_cast<std::ptrdiff_t>(e));
}

[[noreturn]] void bound_exceeded(const char* what) {
  throw Error(ErrorKind::BoundExceeded,
              std::string(what) + ": search bound reached without an answer");
}

// Pruning for candidates that must be isomorphic to a fixed target.
class Target {
 public:
  explicit Target(const Tree3S& t)
      : t_(t), rank_(rank(t)), form_(canonical_form(t)) {
    top_ = tail_class(t, rank_).length;
  }

  bool matches(const Seq& s) const { return canonical_form(tree_of(s)) == form_; }

  // No extension of s to the right can match.
  bool dead(const Seq& s) const {
    const std::size_t r = rank(s);
    if (r > rank_) return true;
    return r == rank_ && tail_class(tree_of(s), rank_).length > top_;
  }

  // base ends with k >= 1 copies of a period of rank s; can base + P match
  // for some prefix P of the period?
  bool family_alive(const Seq& base, std::size_t s) {
    if (s > rank_ || dead(base)) return false;
    if (s == rank_) return true;  // the top condensation grows with k
    if (rank(base) < rank_) return false;
    const TailClass mine = tail_class(tree_of(base), s);
    const TailClass& want = tail_at(s);
    return mine.kind == want.kind && mine.length < want.length + 2;
  }

 private:
  const TailClass& tail_at(std::size_t s) {
    if (tails_.size() <= s) tails_.resize(s + 1);
    if (!tails_[s]) tails_[s] = tail_class(t_, s);
    return *tails_[s];
  }

  Tree3S t_;
  std::size_t rank_;
  CanonicalForm form_;
  std::size_t top_;
  std::vector<std::optional<TailClass>> tails_;
};

// A place in a remainder where extra copies of an omega*-period may be
// inserted without changing the order.
struct Pump {
  std::size_t pos;
  const Seq* body;
};

// Enumerates cuts (P, R) of a term, P + R = term, with P in order of
// increasing extent.  P may sit inside an omega-lift after k unrolled
// copies, or inside an omega*-lift after the whole lift.
class CutSearch {
 public:
  using Visit =
      std::function<bool(const Seq& prefix, const Seq& rest,
                         const std::vector<Pump>& pumps)>;

  CutSearch(Seq base, Target* target, std::size_t cap, Visit visit)
      : base_(std::move(base)), target_(target), cap_(cap),
        visit_(std::move(visit)) {}

  // Optional ceiling on rank(base + P), for searches without a target.
  void set_rank_ceiling(std::size_t r) { ceiling_ = r; }

  bool run(const Seq& items, bool allow_empty_rest) {
    search({}, items, {}, {}, false, !allow_empty_rest);
    return stop_;
  }

  bool truncated() const { return truncated_; }

 private:
  bool dead(const Seq& local) const {
    if (!target_ && !ceiling_) return false;
    const Seq full = cat(base_, local);
    if (ceiling_ && rank(full) > *ceiling_) return true;
    return target_ && target_->dead(full);
  }

  void search(const Seq& local, const Seq& items, const Seq& tail,
              const std::vector<Pump>& pumps, bool skip_empty,
              bool skip_full) {
    const std::size_t n = items.size();
    for (std::size_t j = 0; j <= n; ++j) {
      const Seq pre = cat(local, range(items, 0, j));
      if (dead(pre)) return;
      if (!(j == 0 && skip_empty) && !(j == n && skip_full)) {
        std::vector<Pump> here = pumps;
        for (Pump& p : here) p.pos += n - j;
        if (visit_(pre, cat(range(items, j, n), tail), here)) {
          stop_ = true;
          return;
        }
      }
      if (j == n) break;
      const Node& x = items[j];
      if (x.is_leaf()) continue;
      if (x.sign == Sign::Plus) {
        unroll_plus(pre, x, cat(range(items, j, n), tail), pumps, n - j);
      } else {
        Seq inner_tail = cat(range(items, j + 1, n), tail);
        std::vector<Pump> inner{{0, &x.children}};
        for (Pump p : pumps) inner.push_back({p.pos + n - j - 1, p.body});
        Seq with_lift = pre;
        with_lift.push_back(x);
        search(with_lift, x.children, inner_tail, inner, false, true);
      }
      if (stop_) return;
    }
  }

  // Cuts inside copy k+1 of the omega-lift x, for k = 0, 1, ...
  void unroll_plus(const Seq& pre, const Node& x, const Seq& tail,
                   const std::vector<Pump>& pumps, std::size_t shift) {
    const Seq& body = x.children;
    const std::size_t body_rank = rank(body);
    std::vector<Pump> inner = pumps;
    for (Pump& p : inner) p.pos += shift;
    Seq copies = pre;
    std::optional<CanonicalForm> last;
    for (std::size_t k = 0;; ++k) {
      if (k > 0) {
        copies.insert(copies.end(), body.begin(), body.end());
        const Seq full = cat(base_, copies);
        if (target_ && !target_->family_alive(full, body_rank)) return;
        if (ceiling_ && rank(full) > *ceiling_) return;
        CanonicalForm f = canonical_form(tree_of(full));
        if (last && f == *last) return;  // base + A ~ base: nothing new
        if (k > cap_) {
          truncated_ = true;
          return;
        }
        last = std::move(f);
      } else {
        last = canonical_form(tree_of(cat(base_, copies)));
      }
      if (k > 0) {
        // Between copies: the rest is the lift itself, w x A ~ A + w x A.
        if (dead(copies)) return;
        if (visit_(copies, tail, inner)) {
          stop_ = true;
          return;
        }
      }
      search(copies, body, tail, inner, true, true);
      if (stop_) return;
    }
  }

  Seq base_;
  Target* target_;
  std::size_t cap_;
  Visit visit_;
  std::optional<std::size_t> ceiling_;
  bool truncated_ = false;
  bool stop_ = false;
};

// Remainder variants: rest itself, then each pump filled with 1..unroll
// copies.
template <class F>
bool for_each_rest(const Seq& rest, const std::vector<Pump>& pumps,
                   std::size_t unroll, bool& truncated, F&& f) {
  if (f(rest)) return true;
  for (const Pump& p : pumps) {
    Seq grown = rest;
    for (std::size_t k = 1; k <= unroll; ++k) {
      grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(p.pos),
                   p.body->begin(), p.body->end());
      if (f(grown)) return true;
    }
    truncated = true;
  }
  return false;
}

bool prefix_search(const Tree3S& a, const Tree3S& b, const Bounds& bounds) {
  if (a.empty()) return true;
  if (rank(a) > rank(b)) return false;
  if (iso(a, b)) return true;
  Target target(a);
  CutSearch search({}, &target, bounds.k_max,
                   [&](const Seq& p, const Seq&, const std::vector<Pump>&) {
                     return target.matches(p);
                   });
  if (search.run(b.parts(), true)) return true;
  if (search.truncated()) bound_exceeded("prefix embedding");
  return false;
}

// j + 1 cut of rep: rep ~ y + z with z ~ a and y nonempty.
std::optional<Tree3S> proper_suffix_complement(const Tree3S& a,
                                               const Tree3S& rep,
                                               const Bounds& bounds) {
  const Tree3S ra = reverse(a);
  const Tree3S rr = reverse(rep);
  Target target(ra);
  std::optional<Tree3S> found;
  CutSearch search({}, &target, bounds.k_max,
                   [&](const Seq& p, const Seq& rest, const std::vector<Pump>&) {
                     if (rest.empty() || !target.matches(p)) return false;
                     found = reverse(tree_of(rest));
                     return true;
                   });
  search.run(rr.parts(), false);
  if (!found && search.truncated()) bound_exceeded("suffix embedding");
  return found;
}

bool root_sign_clash(const Tree3S& a, const Tree3S& b) {
  if (a.width() != 1 || b.width() != 1) return false;
  const Sign sa = a.parts().front().sign;
  const Sign sb = b.parts().front().sign;
  return sa != Sign::Zero && sb != Sign::Zero && sa != sb;
}

}  // namespace

std::vector<Tree3S> split_irreducibles(const Tree3S& t) {
  std::vector<Tree3S> parts;
  parts.reserve(t.width());
  for (std::size_t i = 0; i < t.width(); ++i) parts.push_back(slice(t, i, i + 1));
  return parts;
}

bool iso(const Tree3S& a, const Tree3S& b) {
  if (a == b) return true;
  if (rank(a) != rank(b) || !(endpoints(a) == endpoints(b)) ||
      finite_size(a) != finite_size(b) || root_sign_clash(a, b))
    return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_prefix_embeddable(const Tree3S& a, const Tree3S& b,
                          const Bounds& bounds) {
  return prefix_search(a, b, bounds);
}

bool is_suffix_embeddable(const Tree3S& a, const Tree3S& b,
                          const Bounds& bounds) {
  return prefix_search(reverse(a), reverse(b), bounds);
}

std::optional<Division> euclid_divide(const Tree3S& l, const Tree3S& lp,
                                      const Bounds& bounds) {
  if (l.empty() || lp.empty())
    throw Error(ErrorKind::EmptyOperand, "division needs nonempty operands");
  const std::size_t r = rank(l);
  if (rank(lp) != r) return std::nullopt;

  // |D^r(k x l)| >= k and D^r of a prefix embeds into D^r(lp).
  const std::size_t top = tail_class(lp, r).length;
  std::size_t k_hi = 0;
  bool truncated = false;
  while (k_hi < top && tail_class(repeat(l, k_hi + 1), r).length <= top) {
    if (k_hi == bounds.k_max) {
      truncated = true;
      break;
    }
    ++k_hi;
  }

  Target target(lp);
  for (std::size_t k = k_hi; k >= 1; --k) {
    const Seq base = repeat(l, k).parts();
    std::optional<Division> found;
    CutSearch search(
        base, &target, bounds.k_max,
        [&](const Seq& l1s, const Seq& rest, const std::vector<Pump>& pumps) {
          if (!target.matches(cat(base, l1s))) return false;
          const Tree3S l1 = tree_of(l1s);
          return for_each_rest(rest, pumps, bounds.unroll, truncated,
                               [&](const Seq& l2s) {
            const Tree3S l2 = tree_of(l2s);
            if (!iso(lift(join(l1, l2), Sign::Plus),
                     lift(join(l2, l1), Sign::Plus)))
              return false;
            try {
              const std::size_t r1 = rank(l1), r2 = rank(l2);
              if (!l1.empty() && r1 < r2 &&
                  !is_prefix_embeddable(lift(l1, Sign::Plus), l2, bounds))
                return false;
              if (!l1.empty() && r1 > r2 &&
                  !is_prefix_embeddable(lift(l2, Sign::Plus), l1, bounds))
                return false;
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::BoundExceeded) throw;
              truncated = true;
              return false;
            }
            found = Division{k, l1, l2};
            return true;
          });
        });
    search.run(l.parts(), false);
    if (found) return found;
    truncated = truncated || search.truncated();
  }
  if (truncated) bound_exceeded("division");
  return std::nullopt;
}

std::optional<Tree3S> omega_period(const Tree3S& t, const Bounds& bounds) {
  const auto top = omega_top(t);
  if (!top || top->head.size() > 1) return std::nullopt;
  Tree3S c;
  if (top->head.empty()) {
    c = join(top->period);
  } else {
    // t ~ a + w x (M + J): it is an omega-sum iff J ~ Y + a for some Y,
    // and then t ~ w x (a + M + Y).
    const Tree3S& a = top->head.front();
    const Tree3S& last = top->period.back();
    const auto y = proper_suffix_complement(a, last, bounds);
    if (!y) return std::nullopt;
    std::vector<Tree3S> parts{a};
    parts.insert(parts.end(), top->period.begin(), top->period.end() - 1);
    parts.push_back(*y);
    c = join(parts);
  }
  if (!iso(t, lift(c, Sign::Plus)))
    throw std::logic_error("omega period failed verification for " + print(t));
  return c;
}

std::optional<Tree3S> omega_star_period(const Tree3S& t, const Bounds& bounds) {
  const auto c = omega_period(reverse(t), bounds);
  if (!c) return std::nullopt;
  return reverse(*c);
}

std::optional<Tree3S> merge_pair(const Tree3S& i, const Tree3S& j,
                                 const Bounds& bounds) {
  if (i.width() != 1 || j.width() != 1)
    throw Error(ErrorKind::NotApplicable,
                "merge_pair needs two nonempty irreducible terms");
  const std::size_t ri = rank(i), rj = rank(j);
  // An omega-sum L1+...+Ln of irreducibles needs rank(Ln) above the others,
  // and dually for omega*-sums.
  if (ri == rj) return std::nullopt;
  const Tree3S both = join(i, j);
  if (ri < rj) {
    if (j.parts().front().sign != Sign::Plus) return std::nullopt;
    const auto c = omega_period(both, bounds);
    if (!c) return std::nullopt;
    return lift(*c, Sign::Plus);
  }
  if (i.parts().front().sign != Sign::Minus) return std::nullopt;
  const auto c = omega_star_period(both, bounds);
  if (!c) return std::nullopt;
  return lift(*c, Sign::Minus);
}

std::vector<Tree3S> minimal_decomposition(const Tree3S& t,
                                          const Bounds& bounds) {
  std::vector<Tree3S> parts = split_irreducibles(t);
  bool undecided = false;
  for (std::size_t p = 0; p + 1 < parts.size();) {
    std::optional<Tree3S> merged;
    try {
      merged = merge_pair(parts[p], parts[p + 1], bounds);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BoundExceeded) throw;
      undecided = true;
    }
    if (!merged) {
      ++p;
      continue;
    }
    parts[p] = std::move(*merged);
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    if (p > 0) --p;
  }
  if (undecided) {
    // Only pairs of the final list matter.
    for (std::size_t p = 0; p + 1 < parts.size(); ++p)
      if (merge_pair(parts[p], parts[p + 1], bounds))
        throw std::logic_error("width: merge missed in the greedy pass");
  }
  return parts;
}

std::size_t width(const Tree3S& t, const Bounds& bounds) {
  return minimal_decomposition(t, bounds).size();
}

nlohmann::json to_json(const Division& d) {
  return {{"k", d.k}, {"l1", print(d.l1)}, {"l2", print(d.l2)}};
}

}  // namespace lorder
