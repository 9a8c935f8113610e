#include "lorder/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <unordered_map>

namespace lorder {

namespace {

// Labelled terms: leaves carry a letter, internal nodes a sign.
struct LNode {
  Sign sign = Sign::Zero;
  Letter label = 0;
  std::vector<LNode> kids;
};
using LSeq = std::vector<LNode>;

constexpr Letter kPoint = 0;

// A class that may still grow at its open end:
//   Fin  u        (finite)
//   Om   u v^w    (may grow on the left)
//   OmS  ^w v u   (may grow on the right)
struct Pending {
  enum class Kind : std::uint8_t { Fin, Om, OmS };
  Kind kind = Kind::Fin;
  Word u;
  Word v;
};

enum class ClassKind : std::uint32_t { Fin = 1, Om = 2, OmS = 3, Zee = 4 };

struct Summary {
  bool finite = true;
  Word word;
  std::optional<Pending> first;
  LSeq mid;
  std::optional<Pending> last;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct Interner {
  std::unordered_map<Word, Letter, WordHash> ids;
  std::vector<Word> keys{Word{}};  // keys[0]: the point
  std::vector<std::optional<Tree3S>> reps{finite(1)};

  Letter intern(Word key) {
    const auto next = static_cast<Letter>(keys.size());
    auto [it, fresh] = ids.try_emplace(key, next);
    if (fresh) {
      keys.push_back(std::move(key));
      reps.emplace_back();
    }
    return it->second;
  }
};

Interner& interner() {
  thread_local Interner in;
  return in;
}

void rotate_right(Word& v) {
  std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
}

void rotate_left(Word& v) { std::rotate(v.begin(), v.begin() + 1, v.end()); }

// u v^w with u absorbed into the period.
void normalize_om(Word& u, Word& v) {
  v = primitive_root(v);
  while (!u.empty() && u.back() == v.back()) {
    u.pop_back();
    rotate_right(v);
  }
}

// ^w v u with u absorbed into the period.
void normalize_oms(Word& v, Word& u) {
  v = primitive_root(v);
  std::size_t k = 0;
  while (k < u.size() && u[k] == v.front()) {
    ++k;
    rotate_left(v);
  }
  u.erase(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
}

// ^w v u w^w: widest left period, narrowest right period.
void normalize_zee(Word& v, Word& u, Word& w) {
  normalize_oms(v, u);
  normalize_om(u, w);
  if (!u.empty()) return;
  const std::size_t cap = v.size() + w.size();
  for (std::size_t steps = 0; v.back() == w.back(); ++steps) {
    if (steps > cap) {
      // Fully periodic: one period, in least rotation, on both sides.
      w = least_rotation(w);
      v = w;
      return;
    }
    rotate_right(v);
    rotate_right(w);
  }
}

Word encode(ClassKind kind, const Word& v, const Word& u, const Word& w) {
  Word key;
  key.reserve(v.size() + u.size() + w.size() + 4);
  key.push_back(static_cast<Letter>(kind));
  key.push_back(static_cast<Letter>(v.size()));
  key.insert(key.end(), v.begin(), v.end());
  key.push_back(static_cast<Letter>(u.size()));
  key.insert(key.end(), u.begin(), u.end());
  key.insert(key.end(), w.begin(), w.end());
  return key;
}

Letter close(Pending p) {
  switch (p.kind) {
    case Pending::Kind::Fin:
      return interner().intern(encode(ClassKind::Fin, {}, p.u, {}));
    case Pending::Kind::Om:
      normalize_om(p.u, p.v);
      return interner().intern(encode(ClassKind::Om, {}, p.u, p.v));
    case Pending::Kind::OmS:
      normalize_oms(p.v, p.u);
      return interner().intern(encode(ClassKind::OmS, p.v, p.u, {}));
  }
  return kPoint;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// The class formed when a right-open-ended class l meets a left one f.
Letter merge(const Pending& l, const Pending& f) {
  assert(l.kind != Pending::Kind::Om && f.kind != Pending::Kind::OmS);
  Word u = concat(l.u, f.u);
  if (l.kind == Pending::Kind::Fin) {
    if (f.kind == Pending::Kind::Fin) return close({Pending::Kind::Fin, u, {}});
    return close({Pending::Kind::Om, u, f.v});
  }
  if (f.kind == Pending::Kind::Fin) return close({Pending::Kind::OmS, u, l.v});
  Word v = l.v;
  Word w = f.v;
  normalize_zee(v, u, w);
  return interner().intern(encode(ClassKind::Zee, v, u, w));
}

Word junction(const std::optional<Pending>& l,
              const std::optional<Pending>& f) {
  if (l && f) return {merge(*l, *f)};
  if (l) return {close(*l)};
  if (f) return {close(*f)};
  return {};
}

LNode leaf(Letter a) { return LNode{Sign::Zero, a, {}}; }

void append_leaves(LSeq& s, const Word& w) {
  for (Letter a : w) s.push_back(leaf(a));
}

Summary add(Summary a, Summary b) {
  if (a.finite && b.finite) {
    a.word.insert(a.word.end(), b.word.begin(), b.word.end());
    return a;
  }
  if (a.finite) {
    if (a.word.empty()) return b;
    if (b.first) b.first->u = concat(std::move(a.word), b.first->u);
    else b.first = Pending{Pending::Kind::Fin, std::move(a.word), {}};
    return b;
  }
  if (b.finite) {
    if (b.word.empty()) return a;
    if (a.last) a.last->u = concat(std::move(a.last->u), b.word);
    else a.last = Pending{Pending::Kind::Fin, std::move(b.word), {}};
    return a;
  }
  Summary r;
  r.finite = false;
  r.first = std::move(a.first);
  r.last = std::move(b.last);
  r.mid = std::move(a.mid);
  append_leaves(r.mid, junction(a.last, b.first));
  r.mid.insert(r.mid.end(), std::make_move_iterator(b.mid.begin()),
               std::make_move_iterator(b.mid.end()));
  return r;
}

Summary summarize(const LSeq& xs);

Summary summarize(const LNode& x) {
  if (x.kids.empty()) {
    Summary s;
    s.word = {x.label};
    return s;
  }
  Summary s = summarize(x.kids);
  Summary r;
  r.finite = false;
  if (s.finite) {
    if (x.sign == Sign::Plus)
      r.first = Pending{Pending::Kind::Om, {}, std::move(s.word)};
    else
      r.last = Pending{Pending::Kind::OmS, {}, std::move(s.word)};
    return r;
  }
  const Word j = junction(s.last, s.first);
  LNode body{x.sign, 0, {}};
  if (x.sign == Sign::Plus) {
    body.kids = std::move(s.mid);
    append_leaves(body.kids, j);
    r.first = std::move(s.first);
  } else {
    append_leaves(body.kids, j);
    body.kids.insert(body.kids.end(), std::make_move_iterator(s.mid.begin()),
                     std::make_move_iterator(s.mid.end()));
    r.last = std::move(s.last);
  }
  assert(!body.kids.empty());
  r.mid.push_back(std::move(body));
  return r;
}

Summary summarize(const LSeq& xs) {
  Summary acc;
  for (const LNode& x : xs) acc = add(std::move(acc), summarize(x));
  return acc;
}

// The labelled condensation of an infinite term.
LSeq condense(Summary s) {
  assert(!s.finite);
  LSeq out;
  if (s.first) out.push_back(leaf(close(std::move(*s.first))));
  out.insert(out.end(), std::make_move_iterator(s.mid.begin()),
             std::make_move_iterator(s.mid.end()));
  if (s.last) out.push_back(leaf(close(std::move(*s.last))));
  return out;
}

LNode label(const Node& n) {
  LNode l{n.sign, kPoint, {}};
  l.kids.reserve(n.children.size());
  for (const Node& c : n.children) l.kids.push_back(label(c));
  return l;
}

LSeq label(const Tree3S& t) {
  LSeq s;
  s.reserve(t.width());
  for (const Node& c : t.parts()) s.push_back(label(c));
  return s;
}

struct Cache {
  std::unordered_map<Tree3S, CanonicalForm, TreeHash> forms;
};

Cache& cache() {
  thread_local Cache c;
  return c;
}

constexpr std::size_t kCacheLimit = 1 << 16;

Tree3S representative(Letter a);

Tree3S sum_of(Word::const_iterator b, Word::const_iterator e) {
  std::vector<Tree3S> parts;
  for (; b != e; ++b) parts.push_back(representative(*b));
  return join(parts);
}

Tree3S sum_of(const Word& w) { return sum_of(w.begin(), w.end()); }

// An order whose isomorphism type is the class named by a.
Tree3S representative(Letter a) {
  Interner& in = interner();
  if (in.reps[a]) return *in.reps[a];
  const Word key = in.keys[a];
  auto it = key.begin() + 1;
  const auto vlen = static_cast<std::ptrdiff_t>(*it++);
  const Word v(it, it + vlen);
  it += vlen;
  const auto ulen = static_cast<std::ptrdiff_t>(*it++);
  const Word u(it, it + ulen);
  it += ulen;
  const Word w(it, key.end());
  Tree3S r;
  switch (static_cast<ClassKind>(key.front())) {
    case ClassKind::Fin: r = sum_of(u); break;
    case ClassKind::Om: r = join(sum_of(u), lift(sum_of(w), Sign::Plus)); break;
    case ClassKind::OmS: r = join(lift(sum_of(v), Sign::Minus), sum_of(u)); break;
    case ClassKind::Zee: {
      const Tree3S parts[] = {lift(sum_of(v), Sign::Minus), sum_of(u),
                              lift(sum_of(w), Sign::Plus)};
      r = join(parts);
      break;
    }
  }
  interner().reps[a] = r;
  return r;
}

}  // namespace

Word primitive_root(const Word& v) {
  const std::size_t n = v.size();
  if (n < 2) return v;
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && v[i] != v[k]) k = pi[k - 1];
    if (v[i] == v[k]) ++k;
    pi[i] = k;
  }
  const std::size_t p = n - pi[n - 1];
  if (n % p != 0) return v;
  return Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p));
}

Word least_rotation(const Word& v) {
  const std::size_t n = v.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = v[(i + k) % n];
    const Letter b = v[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) i += k + 1;
    else j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  const std::size_t start = std::min(i, j);
  Word out(v);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start),
              out.end());
  return out;
}

CanonicalForm canonical_form(const Tree3S& t) {
  Cache& c = cache();
  if (auto it = c.forms.find(t); it != c.forms.end()) return it->second;
  LSeq seq = label(t);
  CanonicalForm form;
  for (;;) {
    Summary s = summarize(seq);
    if (s.finite) {
      form.word = std::move(s.word);
      break;
    }
    seq = condense(std::move(s));
    ++form.rank;
  }
  if (c.forms.size() >= kCacheLimit) c.forms.clear();
  c.forms.emplace(t, form);
  return form;
}

TailClass tail_class(const Tree3S& t, std::size_t level) {
  LSeq seq = label(t);
  for (std::size_t i = 0; i < level; ++i) {
    Summary s = summarize(seq);
    if (s.finite) return {};
    seq = condense(std::move(s));
  }
  Summary s = summarize(seq);
  if (s.finite) return {TailClass::Kind::Fin, s.word.size()};
  if (!s.last) return {};
  Pending p = std::move(*s.last);
  if (p.kind == Pending::Kind::Fin) return {TailClass::Kind::Fin, p.u.size()};
  normalize_oms(p.v, p.u);
  return {TailClass::Kind::OmS, p.u.size()};
}

std::optional<OmegaTop> omega_top(const Tree3S& t) {
  const CanonicalForm form = canonical_form(t);
  if (form.rank == 0) return std::nullopt;
  LSeq seq = label(t);
  for (std::size_t i = 0; i + 1 < form.rank; ++i)
    seq = condense(summarize(seq));
  Summary s = summarize(seq);
  if (s.finite || !s.first || s.first->kind != Pending::Kind::Om ||
      !s.mid.empty() || s.last)
    return std::nullopt;
  Pending p = std::move(*s.first);
  normalize_om(p.u, p.v);
  OmegaTop top;
  for (Letter a : p.u) top.head.push_back(representative(a));
  for (Letter a : p.v) top.period.push_back(representative(a));
  return top;
}

void clear_canonical_cache() { cache().forms.clear(); }

}  // namespace lorder
