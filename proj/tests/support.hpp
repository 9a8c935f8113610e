#pragma once

// Shared generators and the curated corpus used by the property suites and
// the acceptance runner.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "lorder/expr.hpp"
#include "lorder/rewrites.hpp"
#include "lorder/tree.hpp"

namespace lorder::testing {

using Rng = std::mt19937_64;

// 60 expressions of rank <= 3, several presentations per order type.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> c = {
      "0", "1", "2", "5", "1 + 1 + 1",
      "w", "1 + w", "w*3", "w*(2 + w)", "3 + w",
      "w-", "w- + 1", "w-*2", "w- + 4", "w-*(w- + 1)",
      "w + 1", "2 + w + 3", "w + w-", "w- + w", "w-*(1) + w",
      "w + w", "w*2 + 1", "w*w", "w*(1 + w)", "w + w*w",
      "w*(w + w)", "w*w + w", "w*w + 1", "w-*w-", "w-*w- + w",
      "w*(w + w-)", "w + w*(w- + w)", "w*(w- + w)", "w-*(w + w-)", "w-*(w- + w) + w-",
      "w-*(w- + w)", "w*(w + w- + 1)", "w + w-*(w + w-)", "w*w-", "w-*w",
      "w + w- + w", "w- + w + w- + w", "w*(w*w)", "w*w*w", "w*(w*w + w)",
      "w*(w- + w)*w", "w*w*(w- + w)", "w*(w*(w- + w) + 1)", "w-*w*w", "w*(w + w*w-)",
      "w*(w-*(w + w-) + w)", "1 + w*w*w", "w*w*w + w*w", "w-*(w*w + w-)", "w + w*(w + w*w)",
      "w*(1 + w*(w- + w))", "w*(w*(w- + w))", "w- + w*w", "w*w + w-", "w-*(w-*w- + w)",
  };
  return c;
}

inline std::vector<Tree3S> corpus_trees() {
  std::vector<Tree3S> out;
  for (const std::string& e : corpus()) out.push_back(parse_tree(e));
  return out;
}

namespace detail {

inline Node random_node(Rng& rng, std::size_t height, std::size_t& budget) {
  std::uniform_int_distribution<int> coin(0, 99);
  if (height == 0 || budget < 2 || coin(rng) < 35) {
    if (budget) --budget;
    return Node{};
  }
  --budget;
  Node n;
  n.sign = coin(rng) < 50 ? Sign::Plus : Sign::Minus;
  std::uniform_int_distribution<std::size_t> kids(1, 3);
  const std::size_t k = kids(rng);
  for (std::size_t i = 0; i < k && budget > 0; ++i)
    n.children.push_back(random_node(rng, height - 1, budget));
  if (n.children.empty()) n.children.push_back(Node{});
  return n;
}

}  // namespace detail

// Valid tree of height <= max_height with about max_nodes nodes at most.
inline Tree3S random_tree(Rng& rng, std::size_t max_height, std::size_t max_nodes) {
  std::size_t budget = max_nodes - 1;
  Node root;
  std::uniform_int_distribution<std::size_t> parts(1, 3);
  const std::size_t k = parts(rng);
  for (std::size_t i = 0; i < k && budget > 0; ++i)
    root.children.push_back(detail::random_node(rng, max_height - 1, budget));
  return Tree3S::validate(std::move(root));
}

// Random walk of at most `steps` applicable moves with m <= m_max.
inline Witness random_witness(Rng& rng, const Tree3S& t, std::size_t steps, std::size_t m_max) {
  Witness w;
  Tree3S cur = t;
  for (std::size_t i = 0; i < steps; ++i) {
    const std::vector<RewriteStep> opts = applicable_steps(cur, m_max);
    if (opts.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, opts.size() - 1);
    const RewriteStep s = opts[pick(rng)];
    cur = lorder::apply(cur, s);
    w.push_back(s);
  }
  return w;
}

}  // namespace lorder::testing
