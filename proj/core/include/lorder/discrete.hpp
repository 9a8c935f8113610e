#pragma once

// Discrete orders: the decomposition L ~ [w +] L' x Z [+ w*], alternating
// (3-)signed trees, and the two constructions relating them.

#include "lorder/euclid.hpp"
#include "lorder/tree.hpp"

namespace lorder {

enum class DiscreteShape { MinOnly, MaxOnly, Both, Neither };

const char* to_string(DiscreteShape s) noexcept;

struct DiscreteForm {
  DiscreteShape shape = DiscreteShape::Neither;
  Tree3S core;  // L'
};

// Throws NotDiscrete or FiniteInput.
DiscreteForm discrete_decompose(const Tree3S& t);
Tree3S reassemble(const DiscreteForm& f);

bool is_alternating(const SignedTree& s);
bool is_alternating(const Tree3S& t);

// An alternating signed tree for a discrete indecomposable order.  The
// output's order has the rank and root kind of t; equimorphism with t holds
// under the indecomposability hypothesis and is not checked.
// Throws NotDiscrete, NotIndecomposable, BoundExceeded.
SignedTree ast_for_discrete_indec(const Tree3S& t, const Bounds& bounds = {});

// An alternating 3-signed tree isomorphic to a bounded discrete order.
// Throws NotDiscrete or Unbounded.
Tree3S a3st_for_bounded_discrete(const Tree3S& t);

}  // namespace lorder
