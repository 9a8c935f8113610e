#pragma once

// Decision procedures: isomorphism, prefix/suffix embedding, the Euclidean
// division step, pair merging and width.

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lorder/tree.hpp"

namespace lorder {

struct Bounds {
  std::size_t k_max = 64;  // copies of one period consumed by a search
  std::size_t unroll = 8;  // copies of an omega*-period appended to a rest
};

struct Division {
  std::size_t k = 0;
  Tree3S l1;
  Tree3S l2;
};

// The root's children, each re-rooted.
std::vector<Tree3S> split_irreducibles(const Tree3S& t);

bool iso(const Tree3S& a, const Tree3S& b);

// Is a isomorphic to an initial (final) segment of b?  Throws BoundExceeded
// when a search bound was hit before an answer was certain.
bool is_prefix_embeddable(const Tree3S& a, const Tree3S& b,
                          const Bounds& bounds = {});
bool is_suffix_embeddable(const Tree3S& a, const Tree3S& b,
                          const Bounds& bounds = {});

// Largest k >= 1 and a cut l = l1 + l2 (l2 nonempty) with
// lp ~ k x l + l1 and w x (l1 + l2) ~ w x (l2 + l1).
std::optional<Division> euclid_divide(const Tree3S& l, const Tree3S& lp,
                                      const Bounds& bounds = {});

// C with t ~ w x C (t ~ w* x C), if one exists.
std::optional<Tree3S> omega_period(const Tree3S& t, const Bounds& bounds = {});
std::optional<Tree3S> omega_star_period(const Tree3S& t,
                                        const Bounds& bounds = {});

// A single irreducible term isomorphic to i + j, when there is one.
// i and j must be nonempty with root width 1.
std::optional<Tree3S> merge_pair(const Tree3S& i, const Tree3S& j,
                                 const Bounds& bounds = {});

// Irreducible parts, greedily merged until no adjacent pair merges; by the
// width theorem their number is the width of t.
std::vector<Tree3S> minimal_decomposition(const Tree3S& t,
                                          const Bounds& bounds = {});
std::size_t width(const Tree3S& t, const Bounds& bounds = {});

nlohmann::json to_json(const Division& d);

}  // namespace lorder
