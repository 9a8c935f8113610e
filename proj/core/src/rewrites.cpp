#include "lorder/rewrites.hpp"

#include <algorithm>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "lorder/invariants.hpp"

namespace lorder {

namespace {

using Kind = RewriteStep::Kind;

[[noreturn]] void not_applicable(const std::string& why, const TreePath& p) {
  throw Error(ErrorKind::NotApplicable, why + " at " + path_to_string(p));
}

// The parent of the addressed node and the node's index in it.
struct Site {
  Node* parent;
  std::size_t index;
  Node& node() const { return parent->children[index]; }
};

Site locate(Node& root, const TreePath& p) {
  if (p.empty()) not_applicable("the root cannot be rewritten", p);
  Node* n = &root;
  for (std::size_t d = 0; d + 1 < p.size(); ++d) {
    if (p[d] >= n->children.size())
      throw Error(ErrorKind::BadPath, "no node at path " + path_to_string(p));
    n = &n->children[p[d]];
  }
  if (p.back() >= n->children.size())
    throw Error(ErrorKind::BadPath, "no node at path " + path_to_string(p));
  Site s{n, p.back()};
  if (s.node().sign == Sign::Zero) not_applicable("a leaf cannot be rewritten", p);
  return s;
}

bool periodic(const std::vector<Node>& xs, std::size_t m) {
  if (m == 0 || xs.size() % m != 0) return false;
  const std::size_t block = xs.size() / m;
  for (std::size_t i = block; i < xs.size(); ++i)
    if (!(xs[i] == xs[i - block])) return false;
  return true;
}

Node rewrite(const Tree3S& t, const RewriteStep& s) {
  Node root = t.root();
  Site site = locate(root, s.path);
  Node& n = site.node();
  auto& kids = n.children;
  const auto at = static_cast<std::ptrdiff_t>(site.index);
  switch (s.kind) {
    case Kind::Exude: {
      if (n.sign == Sign::Plus) {
        Node first = kids.front();
        std::rotate(kids.begin(), kids.begin() + 1, kids.end());
        site.parent->children.insert(site.parent->children.begin() + at,
                                     std::move(first));
      } else {
        Node last = kids.back();
        std::rotate(kids.rbegin(), kids.rbegin() + 1, kids.rend());
        site.parent->children.insert(site.parent->children.begin() + at + 1,
                                     std::move(last));
      }
      break;
    }
    case Kind::ExudeInverse: {
      auto& sib = site.parent->children;
      if (n.sign == Sign::Plus) {
        if (site.index == 0 || !(sib[site.index - 1] == kids.back()))
          not_applicable("preceding sibling is not the last child", s.path);
        std::rotate(kids.rbegin(), kids.rbegin() + 1, kids.rend());
        sib.erase(sib.begin() + at - 1);
      } else {
        if (site.index + 1 >= sib.size() ||
            !(sib[site.index + 1] == kids.front()))
          not_applicable("following sibling is not the first child", s.path);
        std::rotate(kids.begin(), kids.begin() + 1, kids.end());
        sib.erase(sib.begin() + at + 1);
      }
      break;
    }
    case Kind::Repl: {
      if (s.m == 0) not_applicable("m must be positive", s.path);
      std::vector<Node> copy = kids;
      kids.reserve(copy.size() * s.m);
      for (std::size_t i = 1; i < s.m; ++i)
        kids.insert(kids.end(), copy.begin(), copy.end());
      break;
    }
    case Kind::ReplInverse: {
      if (!periodic(kids, s.m))
        not_applicable("child list is not " + std::to_string(s.m) +
                           "-periodic",
                       s.path);
      kids.resize(kids.size() / s.m);
      break;
    }
  }
  return root;
}

void collect_paths(const Node& n, TreePath& p, std::vector<TreePath>& out) {
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    const Node& c = n.children[i];
    if (c.is_leaf()) continue;
    p.push_back(i);
    out.push_back(p);
    collect_paths(c, p, out);
    p.pop_back();
  }
}

}  // namespace

Tree3S exude(const Tree3S& t, const TreePath& p) {
  return apply(t, RewriteStep{Kind::Exude, p, 1});
}

Tree3S repl(const Tree3S& t, const TreePath& p, std::size_t m) {
  return apply(t, RewriteStep{Kind::Repl, p, m});
}

Tree3S apply(const Tree3S& t, const RewriteStep& s) {
  return Tree3S::adopt(rewrite(t, s));
}

Tree3S apply(const Tree3S& t, const Witness& w) {
  Tree3S cur = t;
  for (const RewriteStep& s : w) cur = apply(cur, s);
  return cur;
}

bool applicable(const Tree3S& t, const RewriteStep& s) {
  try {
    (void)rewrite(t, s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

RewriteStep inverse(const Tree3S& before, const RewriteStep& s) {
  RewriteStep r = s;
  switch (s.kind) {
    case Kind::Repl: r.kind = Kind::ReplInverse; return r;
    case Kind::ReplInverse: r.kind = Kind::Repl; return r;
    case Kind::Exude:
    case Kind::ExudeInverse: break;
  }
  const Node& n = node_at(before, s.path);
  if (n.sign == Sign::Zero) not_applicable("a leaf cannot be rewritten", s.path);
  // A + exude inserts before the node, shifting it one place right.
  if (s.kind == Kind::Exude) {
    r.kind = Kind::ExudeInverse;
    if (n.sign == Sign::Plus) ++r.path.back();
  } else {
    r.kind = Kind::Exude;
    if (n.sign == Sign::Plus) --r.path.back();
  }
  return r;
}

std::vector<RewriteStep> applicable_steps(const Tree3S& t, std::size_t m_max) {
  std::vector<TreePath> paths;
  TreePath scratch;
  collect_paths(t.root(), scratch, paths);
  std::vector<RewriteStep> out;
  for (const auto& p : paths) out.push_back({Kind::Exude, p, 1});
  for (const auto& p : paths) {
    RewriteStep s{Kind::ExudeInverse, p, 1};
    if (applicable(t, s)) out.push_back(std::move(s));
  }
  for (const auto& p : paths)
    for (std::size_t m = 2; m <= m_max; ++m) out.push_back({Kind::Repl, p, m});
  for (const auto& p : paths) {
    const auto& kids = node_at(t, p).children;
    for (std::size_t m = 2; m <= m_max; ++m)
      if (periodic(kids, m)) out.push_back({Kind::ReplInverse, p, m});
  }
  return out;
}

std::optional<Witness> search_equiv(const Tree3S& a, const Tree3S& b,
                                    const SearchLimits& limits) {
  if (a == b) return Witness{};
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
  const std::size_t cap =
      limits.size_cap ? limits.size_cap
                      : 2 * std::max(node_count(a), node_count(b)) + 4;

  struct Entry {
    Tree3S tree;
    std::size_t parent;
    RewriteStep step;
  };
  std::vector<Entry> seen;
  std::unordered_map<Tree3S, std::size_t, TreeHash> index;
  seen.push_back({a, 0, {}});
  index.emplace(a, 0);

  auto witness_to = [&](std::size_t i) {
    Witness w;
    for (; i != 0; i = seen[i].parent) w.push_back(seen[i].step);
    std::reverse(w.begin(), w.end());
    return w;
  };

  std::size_t layer_begin = 0;
  for (std::size_t d = 0; d < limits.depth; ++d) {
    const std::size_t layer_end = seen.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const Tree3S cur = seen[i].tree;
      for (RewriteStep& s : applicable_steps(cur, limits.m_max)) {
        Tree3S next = apply(cur, s);
        if (node_count(next) > cap || index.contains(next)) continue;
        if (seen.size() >= limits.node_budget)
          throw Error(ErrorKind::ResourceLimit,
                      "rewrite search visited more than " +
                          std::to_string(limits.node_budget) + " trees");
        index.emplace(next, seen.size());
        seen.push_back({next, i, std::move(s)});
        if (next == b) return witness_to(seen.size() - 1);
      }
    }
    if (layer_end == seen.size()) break;
    layer_begin = layer_end;
  }
  return std::nullopt;
}

Witness shift_root(const Witness& w, std::size_t offset) {
  Witness out = w;
  for (RewriteStep& s : out) s.path.front() += offset;
  return out;
}

Witness prefix_paths(const Witness& w, const TreePath& prefix) {
  Witness out = w;
  for (RewriteStep& s : out) s.path.insert(s.path.begin(), prefix.begin(), prefix.end());
  return out;
}

const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::Exude: return "exude";
    case Kind::ExudeInverse: return "exude_inverse";
    case Kind::Repl: return "repl";
    case Kind::ReplInverse: return "repl_inverse";
  }
  return "?";
}

nlohmann::json to_json(const Witness& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const RewriteStep& s : w) {
    nlohmann::json j{{"kind", kind_name(s.kind)}, {"path", s.path}};
    if (s.kind == Kind::Repl || s.kind == Kind::ReplInverse) j["m"] = s.m;
    out.push_back(std::move(j));
  }
  return out;
}

Witness witness_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::BadJson, "witness must be an array");
  Witness w;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("kind") || !e.contains("path"))
      throw Error(ErrorKind::BadJson, "step needs \"kind\" and \"path\"");
    RewriteStep s;
    const std::string k = e["kind"].get<std::string>();
    if (k == "exude") s.kind = Kind::Exude;
    else if (k == "exude_inverse") s.kind = Kind::ExudeInverse;
    else if (k == "repl") s.kind = Kind::Repl;
    else if (k == "repl_inverse") s.kind = Kind::ReplInverse;
    else throw Error(ErrorKind::BadJson, "unknown step kind \"" + k + "\"");
    s.path = e["path"].get<TreePath>();
    if (s.kind == Kind::Repl || s.kind == Kind::ReplInverse) {
      if (!e.contains("m")) throw Error(ErrorKind::BadJson, "repl step needs \"m\"");
      s.m = e["m"].get<std::size_t>();
    }
    w.push_back(std::move(s));
  }
  return w;
}

std::string to_string(const Witness& w) {
  std::string out;
  for (const RewriteStep& s : w) {
    if (!out.empty()) out += "; ";
    out += kind_name(s.kind);
    out += ' ';
    out += path_to_string(s.path);
    if (s.kind == Kind::Repl || s.kind == Kind::ReplInverse)
      out += " m=" + std::to_string(s.m);
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace lorder
