#pragma once

// 3-signed trees: the term representation of finitely presented orders.
//
// A node with sign + (resp. -) over children X_0..X_{w-1} denotes
// omega (resp. omega*) copies of X_0 + ... + X_{w-1}; a leaf denotes one
// point; the root sums its children.  The single-node tree is the empty
// order.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lorder/error.hpp"

namespace lorder {

enum class Sign : std::uint8_t { Zero, Plus, Minus };

char sign_char(Sign s) noexcept;
Sign flip(Sign s) noexcept;

using TreePath = std::vector<std::size_t>;

std::string path_to_string(const TreePath& p);

struct Node {
  Sign sign = Sign::Zero;
  std::vector<Node> children;

  bool is_leaf() const noexcept { return children.empty(); }
  friend bool operator==(const Node&, const Node&) = default;
};

class Tree3S {
 public:
  Tree3S() = default;

  // Throws InvalidSignError naming the first offending node.
  static Tree3S validate(Node raw);
  // For callers that build trees which are valid by construction.
  static Tree3S adopt(Node raw);

  const Node& root() const noexcept { return root_; }
  const std::vector<Node>& parts() const noexcept { return root_.children; }
  std::size_t width() const noexcept { return root_.children.size(); }
  bool empty() const noexcept { return root_.children.empty(); }

  friend bool operator==(const Tree3S&, const Tree3S&) = default;

 private:
  explicit Tree3S(Node root) : root_(std::move(root)) {}
  Node root_;
};

std::size_t hash_value(const Node& n) noexcept;
inline std::size_t hash_value(const Tree3S& t) noexcept {
  return hash_value(t.root());
}

struct TreeHash {
  std::size_t operator()(const Tree3S& t) const noexcept {
    return hash_value(t);
  }
};

// Signed trees with signs in {+,-} at every node.
struct SignedTree {
  Sign sign = Sign::Plus;
  std::vector<SignedTree> children;
  friend bool operator==(const SignedTree&, const SignedTree&) = default;
};

// "+", "-", or "+[child,child]".
std::string to_string(const SignedTree& s);

// Constants.
Tree3S finite(std::size_t n);
Tree3S omega();
Tree3S omega_star();
Tree3S zee();  // omega* + omega

Tree3S join(const Tree3S& a, const Tree3S& b);
Tree3S join(std::span<const Tree3S> parts);
Tree3S lift(const Tree3S& t, Sign d);
Tree3S subtree(const Tree3S& t, const TreePath& p);
Tree3S hat_subtree(const Tree3S& t, const TreePath& p);
Tree3S embed_st(const SignedTree& s);

// n copies of t.
Tree3S repeat(const Tree3S& t, std::size_t n);
// a copies of c (the order product a x c).
Tree3S multiply(const Tree3S& a, const Tree3S& c);
// The reversed order: mirror child lists, swap + and -.
Tree3S reverse(const Tree3S& t);

// Tree built from a slice of root children.
Tree3S slice(const Tree3S& t, std::size_t begin, std::size_t end);

const Node& node_at(const Tree3S& t, const TreePath& p);
bool valid_path(const Tree3S& t, const TreePath& p) noexcept;

std::size_t node_count(const Tree3S& t) noexcept;
std::size_t height(const Tree3S& t) noexcept;

nlohmann::json to_json(const Tree3S& t);
Tree3S tree_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SignedTree& s);

}  // namespace lorder
