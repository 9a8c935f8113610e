#include "lorder/tree.hpp"

#include <algorithm>
#include <cassert>

#include <nlohmann/json.hpp>

namespace lorder {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSign: return "InvalidSign";
    case ErrorKind::BadPath: return "BadPath";
    case ErrorKind::RootNotAddressable: return "RootNotAddressable";
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::BadJson: return "BadJson";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotDiscrete: return "NotDiscrete";
    case ErrorKind::FiniteInput: return "FiniteInput";
    case ErrorKind::NotIndecomposable: return "NotIndecomposable";
    case ErrorKind::Unbounded: return "Unbounded";
  }
  return "Error";
}

char sign_char(Sign s) noexcept {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::Zero: break;
  }
  return '0';
}

Sign flip(Sign s) noexcept {
  if (s == Sign::Plus) return Sign::Minus;
  if (s == Sign::Minus) return Sign::Plus;
  return s;
}

std::string path_to_string(const TreePath& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

namespace {

void check_node(const Node& n, bool is_root, TreePath& path) {
  const bool want_zero = is_root || n.is_leaf();
  if ((n.sign == Sign::Zero) != want_zero) {
    std::string why = is_root ? "root must have sign 0"
                      : n.is_leaf() ? "leaf must have sign 0"
                                    : "internal node must have sign + or -";
    throw InvalidSignError(path, "invalid sign at " + path_to_string(path) +
                                     ": " + why);
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    check_node(n.children[i], false, path);
    path.pop_back();
  }
}

bool well_formed(const Node& n, bool is_root) {
  if ((n.sign == Sign::Zero) != (is_root || n.is_leaf())) return false;
  return std::all_of(n.children.begin(), n.children.end(),
                     [](const Node& c) { return well_formed(c, false); });
}

Node leaf() { return Node{}; }

void mirror(Node& n) {
  n.sign = flip(n.sign);
  std::reverse(n.children.begin(), n.children.end());
  for (Node& c : n.children) mirror(c);
}

void multiply_into(const std::vector<Node>& a, const std::vector<Node>& c,
                   std::vector<Node>& out) {
  for (const Node& x : a) {
    if (x.is_leaf()) {
      out.insert(out.end(), c.begin(), c.end());
    } else {
      Node lifted{x.sign, {}};
      multiply_into(x.children, c, lifted.children);
      out.push_back(std::move(lifted));
    }
  }
}

std::size_t count(const Node& n) {
  std::size_t k = 1;
  for (const Node& c : n.children) k += count(c);
  return k;
}

std::size_t depth(const Node& n) {
  std::size_t h = 0;
  for (const Node& c : n.children) h = std::max(h, depth(c) + 1);
  return h;
}

Node embed_node(const SignedTree& s) {
  Node n{s.sign, {}};
  if (s.children.empty()) {
    n.children.push_back(leaf());
  } else {
    for (const SignedTree& c : s.children) n.children.push_back(embed_node(c));
  }
  return n;
}

nlohmann::json node_json(const Node& n) {
  nlohmann::json kids = nlohmann::json::array();
  for (const Node& c : n.children) kids.push_back(node_json(c));
  return {{"sign", std::string(1, sign_char(n.sign))}, {"children", kids}};
}

Node node_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sign") || !j["sign"].is_string())
    throw Error(ErrorKind::BadJson, "tree node needs a string \"sign\"");
  const std::string s = j["sign"].get<std::string>();
  Node n;
  if (s == "0") n.sign = Sign::Zero;
  else if (s == "+") n.sign = Sign::Plus;
  else if (s == "-") n.sign = Sign::Minus;
  else throw Error(ErrorKind::BadJson, "unknown sign \"" + s + "\"");
  if (j.contains("children")) {
    if (!j["children"].is_array())
      throw Error(ErrorKind::BadJson, "\"children\" must be an array");
    for (const auto& c : j["children"]) n.children.push_back(node_from_json(c));
  }
  return n;
}

}  // namespace

Tree3S Tree3S::validate(Node raw) {
  TreePath path;
  check_node(raw, true, path);
  return Tree3S(std::move(raw));
}

Tree3S Tree3S::adopt(Node raw) {
  assert(well_formed(raw, true));
  (void)&well_formed;
  return Tree3S(std::move(raw));
}

std::size_t hash_value(const Node& n) noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(n.sign);
  for (const Node& c : n.children) {
    h ^= hash_value(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h * 0xff51afd7ed558ccdull + n.children.size();
}

std::string to_string(const SignedTree& s) {
  std::string out(1, sign_char(s.sign));
  if (s.children.empty()) return out;
  out += '[';
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    if (i) out += ',';
    out += to_string(s.children[i]);
  }
  return out + ']';
}

Tree3S finite(std::size_t n) {
  Node r;
  r.children.assign(n, leaf());
  return Tree3S::adopt(std::move(r));
}

Tree3S omega() { return lift(finite(1), Sign::Plus); }
Tree3S omega_star() { return lift(finite(1), Sign::Minus); }
Tree3S zee() { return join(omega_star(), omega()); }

Tree3S join(const Tree3S& a, const Tree3S& b) {
  Node r = a.root();
  r.children.insert(r.children.end(), b.parts().begin(), b.parts().end());
  return Tree3S::adopt(std::move(r));
}

Tree3S join(std::span<const Tree3S> parts) {
  Node r;
  for (const Tree3S& p : parts)
    r.children.insert(r.children.end(), p.parts().begin(), p.parts().end());
  return Tree3S::adopt(std::move(r));
}

Tree3S lift(const Tree3S& t, Sign d) {
  if (d == Sign::Zero)
    throw Error(ErrorKind::InvalidSign, "lift needs sign + or -");
  if (t.empty())
    throw Error(ErrorKind::EmptyOperand, "cannot lift the empty order");
  Node inner{d, t.parts()};
  Node r;
  r.children.push_back(std::move(inner));
  return Tree3S::adopt(std::move(r));
}

const Node& node_at(const Tree3S& t, const TreePath& p) {
  const Node* n = &t.root();
  for (std::size_t i : p) {
    if (i >= n->children.size())
      throw Error(ErrorKind::BadPath, "no node at path " + path_to_string(p));
    n = &n->children[i];
  }
  return *n;
}

bool valid_path(const Tree3S& t, const TreePath& p) noexcept {
  const Node* n = &t.root();
  for (std::size_t i : p) {
    if (i >= n->children.size()) return false;
    n = &n->children[i];
  }
  return true;
}

Tree3S subtree(const Tree3S& t, const TreePath& p) {
  if (p.empty())
    throw Error(ErrorKind::RootNotAddressable, "the root has no subtree");
  Node r;
  r.children.push_back(node_at(t, p));
  return Tree3S::adopt(std::move(r));
}

Tree3S hat_subtree(const Tree3S& t, const TreePath& p) {
  if (p.empty())
    throw Error(ErrorKind::RootNotAddressable, "the root has no subtree");
  Node n = node_at(t, p);
  if (n.sign == Sign::Zero)
    throw Error(ErrorKind::NotApplicable,
                "hat_subtree needs a node with sign + or - at " +
                    path_to_string(p));
  n.sign = Sign::Zero;
  return Tree3S::adopt(std::move(n));
}

Tree3S embed_st(const SignedTree& s) {
  Node r;
  r.children.push_back(embed_node(s));
  return Tree3S::adopt(std::move(r));
}

Tree3S repeat(const Tree3S& t, std::size_t n) {
  Node r;
  r.children.reserve(t.width() * n);
  for (std::size_t i = 0; i < n; ++i)
    r.children.insert(r.children.end(), t.parts().begin(), t.parts().end());
  return Tree3S::adopt(std::move(r));
}

Tree3S multiply(const Tree3S& a, const Tree3S& c) {
  if (c.empty()) return Tree3S();
  Node r;
  multiply_into(a.parts(), c.parts(), r.children);
  return Tree3S::adopt(std::move(r));
}

Tree3S reverse(const Tree3S& t) {
  Node r = t.root();
  mirror(r);
  return Tree3S::adopt(std::move(r));
}

Tree3S slice(const Tree3S& t, std::size_t begin, std::size_t end) {
  Node r;
  r.children.assign(t.parts().begin() + static_cast<std::ptrdiff_t>(begin),
                    t.parts().begin() + static_cast<std::ptrdiff_t>(end));
  return Tree3S::adopt(std::move(r));
}

std::size_t node_count(const Tree3S& t) noexcept { return count(t.root()); }
std::size_t height(const Tree3S& t) noexcept { return depth(t.root()); }

nlohmann::json to_json(const Tree3S& t) { return node_json(t.root()); }

Tree3S tree_from_json(const nlohmann::json& j) {
  return Tree3S::validate(node_from_json(j));
}

nlohmann::json to_json(const SignedTree& s) {
  nlohmann::json kids = nlohmann::json::array();
  for (const SignedTree& c : s.children) kids.push_back(to_json(c));
  return {{"sign", std::string(1, sign_char(s.sign))}, {"children", kids}};
}

}  // namespace lorder
