#pragma once

// Complete isomorphism invariant for finitely presented orders.
//
// L and L' are isomorphic exactly when their finite condensations are
// isomorphic as orders labelled by the isomorphism type of each class.  A
// class is a finite, omega, omega* or Z-indexed word over the labels of the
// previous level, so it has a normal form (primitive period, absorbed
// prefix).  Iterating until the condensation is finite yields
// (rank, final word), which is equal for two orders iff they are isomorphic.
//
// Labels are interned per thread: forms computed on different threads are
// not comparable.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lorder/tree.hpp"

namespace lorder {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

struct CanonicalForm {
  std::size_t rank = 0;
  Word word;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Tree3S& t);

// The class of the greatest point in the labelled condensation D^level(t).
// Fin: a finite class (or the whole, finite, condensation); OmS: an
// omega*-indexed class.  length is the finite word length, or the length of
// the non-periodic tail of the omega* class in normal form.
struct TailClass {
  enum class Kind { None, Fin, OmS };
  Kind kind = Kind::None;
  std::size_t length = 0;
  friend bool operator==(const TailClass&, const TailClass&) = default;
};

TailClass tail_class(const Tree3S& t, std::size_t level);

// When D^(r-1)(t) is a single omega-indexed class, r = rank(t) >= 1,
// its normal form head . period^omega with each letter realized by an order
// of that isomorphism type; t is then isomorphic to the sum of the head
// followed by omega copies of the period.
struct OmegaTop {
  std::vector<Tree3S> head;
  std::vector<Tree3S> period;
};

std::optional<OmegaTop> omega_top(const Tree3S& t);

// Words in normal form, exposed for testing.
Word primitive_root(const Word& v);
Word least_rotation(const Word& v);

// Drops cached forms on the calling thread.
void clear_canonical_cache();

}  // namespace lorder
