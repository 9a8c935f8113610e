#pragma once

// EXUDE and m-REPL, the two moves generating L-equivalence, with their
// inverses and a bounded breadth-first oracle that finds witnesses.
//
//   exude at +s:  w x (L1+...+Ln)  ->  L1 + w x (L2+...+Ln+L1)
//   exude at -s:  w* x (L1+...+Ln) ->  w* x (Ln+L1+...+L(n-1)) + Ln
//   repl m at s:  children of s     ->  m copies of them

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lorder/tree.hpp"

namespace lorder {

struct RewriteStep {
  enum class Kind { Exude, ExudeInverse, Repl, ReplInverse };
  Kind kind = Kind::Exude;
  TreePath path;
  std::size_t m = 1;  // Repl kinds only

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

using Witness = std::vector<RewriteStep>;

Tree3S exude(const Tree3S& t, const TreePath& p);
Tree3S repl(const Tree3S& t, const TreePath& p, std::size_t m);

// Throws NotApplicable with a diagnostic when the step does not fit t.
Tree3S apply(const Tree3S& t, const RewriteStep& s);
// Qualify calls as lorder::apply: Witness is a std::vector, so unqualified
// calls with non-const arguments also find std::apply.
Tree3S apply(const Tree3S& t, const Witness& w);
bool applicable(const Tree3S& t, const RewriteStep& s);

// The step undoing s, which must be applicable to `before`.
RewriteStep inverse(const Tree3S& before, const RewriteStep& s);

// Every applicable step with 2 <= m <= m_max for Repl kinds, in the search
// order: kind, then path, then m.
std::vector<RewriteStep> applicable_steps(const Tree3S& t, std::size_t m_max);

struct SearchLimits {
  std::size_t depth = 8;
  std::size_t m_max = 4;
  std::size_t node_budget = 200000;
  // Largest tree (in nodes) kept in the frontier; 0 picks
  // 2 * max(|a|, |b|) + 4.
  std::size_t size_cap = 0;
};

// No witness within the limits is not a proof of non-equivalence.
// Throws ResourceLimit when more than node_budget trees are visited.
std::optional<Witness> search_equiv(const Tree3S& a, const Tree3S& b,
                                    const SearchLimits& limits = {});

// Witness transport along the congruence: join(c, a) shifts root indices
// by the width of c; lift(a, d) prefixes every path with 0.
Witness shift_root(const Witness& w, std::size_t offset);
Witness prefix_paths(const Witness& w, const TreePath& prefix);

const char* kind_name(RewriteStep::Kind k) noexcept;
nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
std::string to_string(const Witness& w);

}  // namespace lorder
