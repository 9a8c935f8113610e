#include "lorder/discrete.hpp"

#include <algorithm>

#include "lorder/expr.hpp"
#include "lorder/invariants.hpp"
#include "lorder/rewrites.hpp"

namespace lorder {

namespace {

bool alternating_list(const std::vector<Sign>& signs) {
  if (signs.size() % 2 != 0) return false;
  for (std::size_t x = 0; x < signs.size(); ++x)
    if (signs[x] != (x % 2 == 0 ? Sign::Plus : Sign::Minus)) return false;
  return true;
}

bool alternating_node(const Node& n) {
  if (n.is_leaf()) return true;
  const bool all_leaves = std::all_of(n.children.begin(), n.children.end(),
                                      [](const Node& c) { return c.is_leaf(); });
  if (!all_leaves) {
    std::vector<Sign> signs;
    for (const Node& c : n.children) signs.push_back(c.sign);
    if (!alternating_list(signs)) return false;
  }
  return std::all_of(n.children.begin(), n.children.end(), alternating_node);
}

Sign wanted(std::size_t x) { return x % 2 == 0 ? Sign::Plus : Sign::Minus; }

// Insert single nodes so that the signs run +,-,+,-,... with even length.
std::vector<SignedTree> repair(const std::vector<SignedTree>& kids) {
  std::vector<SignedTree> out;
  for (const SignedTree& c : kids) {
    while (c.sign != wanted(out.size())) out.push_back({wanted(out.size()), {}});
    out.push_back(c);
  }
  if (out.size() % 2 != 0) out.push_back({Sign::Minus, {}});
  return out;
}

[[noreturn]] void not_indecomposable(const std::string& why) {
  throw Error(ErrorKind::NotIndecomposable, why);
}

// Signed tree whose order is equimorphic to core x Z.
SignedTree ast_z(const Tree3S& core, const Bounds& bounds) {
  if (rank(core) == 1) {
    if (iso(core, omega())) return {Sign::Plus, {{Sign::Plus, {}}, {Sign::Minus, {}}}};
    if (iso(core, omega_star()))
      return {Sign::Minus, {{Sign::Plus, {}}, {Sign::Minus, {}}}};
    not_indecomposable("rank-1 component " + print(core) + " is not w or w-");
  }
  const std::vector<Tree3S> parts = minimal_decomposition(core, bounds);
  if (parts.size() != 1)
    not_indecomposable("component has width " + std::to_string(parts.size()));
  const Node& x = parts.front().parts().front();
  std::vector<SignedTree> kids;
  for (const Node& c : x.children) {
    if (c.is_leaf()) continue;
    Node r;
    r.children.push_back(c);
    kids.push_back(ast_z(Tree3S::adopt(std::move(r)), bounds));
  }
  return {x.sign, repair(kids)};
}

// Exude every lift node of t that has signed children, children first.
// Each exude adds a sibling, so later siblings shift right by one.
void sweep(Tree3S& t, const Node& original, TreePath& path) {
  std::size_t shift = 0;
  for (std::size_t i = 0; i < original.children.size(); ++i) {
    const Node& c = original.children[i];
    if (c.is_leaf() || c.children.front().is_leaf()) continue;
    path.push_back(i + shift);
    sweep(t, c, path);
    t = exude(t, path);
    path.pop_back();
    ++shift;
  }
}

}  // namespace

const char* to_string(DiscreteShape s) noexcept {
  switch (s) {
    case DiscreteShape::MinOnly: return "MinOnly";
    case DiscreteShape::MaxOnly: return "MaxOnly";
    case DiscreteShape::Both: return "Both";
    case DiscreteShape::Neither: return "Neither";
  }
  return "?";
}

DiscreteForm discrete_decompose(const Tree3S& t) {
  if (!is_discrete(t)) throw Error(ErrorKind::NotDiscrete, print(t) + " is not discrete");
  if (finite_size(t)) throw Error(ErrorKind::FiniteInput, print(t) + " is finite");
  const Endpoints e = endpoints(t);
  Tree3S core = derivative(t);
  if (e.has_min) core = remove_min(core);
  if (e.has_max) core = remove_max(core);
  DiscreteShape shape = e.has_min ? (e.has_max ? DiscreteShape::Both : DiscreteShape::MinOnly)
                                  : (e.has_max ? DiscreteShape::MaxOnly : DiscreteShape::Neither);
  return {shape, std::move(core)};
}

Tree3S reassemble(const DiscreteForm& f) {
  Tree3S t = multiply(f.core, zee());
  if (f.shape == DiscreteShape::MinOnly || f.shape == DiscreteShape::Both)
    t = join(omega(), t);
  if (f.shape == DiscreteShape::MaxOnly || f.shape == DiscreteShape::Both)
    t = join(t, omega_star());
  return t;
}

bool is_alternating(const SignedTree& s) {
  std::vector<Sign> signs;
  for (const SignedTree& c : s.children) signs.push_back(c.sign);
  if (!alternating_list(signs)) return false;
  return std::all_of(s.children.begin(), s.children.end(),
                     [](const SignedTree& c) { return is_alternating(c); });
}

bool is_alternating(const Tree3S& t) { return alternating_node(t.root()); }

SignedTree ast_for_discrete_indec(const Tree3S& t, const Bounds& bounds) {
  if (finite_size(t)) not_indecomposable("finite input " + print(t));
  if (!is_discrete(t)) throw Error(ErrorKind::NotDiscrete, print(t) + " is not discrete");
  if (rank(t) == 1) {
    if (iso(t, omega())) return {Sign::Plus, {}};
    if (iso(t, omega_star())) return {Sign::Minus, {}};
    not_indecomposable(print(t) + " is neither w nor w-");
  }
  if (width(t, bounds) != 1) not_indecomposable(print(t) + " is not irreducible");
  return ast_z(discrete_decompose(t).core, bounds);
}

Tree3S a3st_for_bounded_discrete(const Tree3S& t) {
  if (!is_discrete(t)) throw Error(ErrorKind::NotDiscrete, print(t) + " is not discrete");
  const Endpoints e = endpoints(t);
  if (!e.has_min || !e.has_max) throw Error(ErrorKind::Unbounded, print(t) + " is not bounded");
  if (finite_size(t)) return t;
  const DiscreteForm f = discrete_decompose(t);
  // Leaves of the core become the pairs w* , w.
  Tree3S body = multiply(f.core, zee());
  const Node original = body.root();
  TreePath path;
  sweep(body, original, path);
  const Tree3S parts[] = {omega(), body, omega_star()};
  return join(parts);
}

}  // namespace lorder
