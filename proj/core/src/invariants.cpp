#include "lorder/invariants.hpp"

#include <algorithm>
#include <cassert>

#include <nlohmann/json.hpp>

namespace lorder {

namespace {

using Seq = std::vector<Node>;

bool item_min(const Node& x) {
  if (x.is_leaf()) return true;
  if (x.sign == Sign::Minus) return false;
  return item_min(x.children.front());
}

bool item_max(const Node& x) {
  if (x.is_leaf()) return true;
  if (x.sign == Sign::Plus) return false;
  return item_max(x.children.back());
}

std::size_t item_rank(const Node& x) {
  if (x.is_leaf()) return 0;
  std::size_t r = 0;
  for (const Node& c : x.children) r = std::max(r, item_rank(c));
  return r + 1;
}

bool seq_discrete(const Seq& xs);

bool item_discrete(const Node& x) {
  if (x.is_leaf()) return true;
  const Seq& body = x.children;
  return seq_discrete(body) &&
         item_max(body.back()) == item_min(body.front());
}

bool seq_discrete(const Seq& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!item_discrete(xs[i])) return false;
    if (i + 1 < xs.size() && item_max(xs[i]) != item_min(xs[i + 1]))
      return false;
  }
  return true;
}

void drop_max(Seq& xs) {
  assert(!xs.empty());
  Node last = std::move(xs.back());
  xs.pop_back();
  if (last.is_leaf()) return;
  assert(last.sign == Sign::Minus);
  // omega* x Y = (omega* x Y) + Y
  Seq tail = last.children;
  xs.push_back(std::move(last));
  drop_max(tail);
  xs.insert(xs.end(), tail.begin(), tail.end());
}

void drop_min(Seq& xs) {
  assert(!xs.empty());
  Node first = std::move(xs.front());
  xs.erase(xs.begin());
  if (first.is_leaf()) return;
  assert(first.sign == Sign::Plus);
  // omega x Y = Y + omega x Y
  Seq head = first.children;
  drop_min(head);
  head.push_back(std::move(first));
  xs.insert(xs.begin(), head.begin(), head.end());
}

Seq seq_derivative(const Seq& xs);

Seq item_derivative(const Node& x) {
  if (x.is_leaf()) return {Node{}};
  const Seq& body = x.children;
  // omega^d x (finite) is a single class
  if (rank(body) == 0) return {Node{}};
  Node out{x.sign, {}};
  Seq d = seq_derivative(body);
  if (item_min(body.front()) && item_max(body.back())) {
    if (x.sign == Sign::Plus) drop_max(d);
    else drop_min(d);
  }
  out.children = std::move(d);
  return {out};
}

Seq seq_derivative(const Seq& xs) {
  Seq acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Seq d = item_derivative(xs[i]);
    if (i > 0 && item_max(xs[i - 1]) && item_min(xs[i])) drop_max(acc);
    acc.insert(acc.end(), d.begin(), d.end());
  }
  return acc;
}

}  // namespace

std::size_t rank(const std::vector<Node>& items) {
  std::size_t r = 0;
  for (const Node& x : items) r = std::max(r, item_rank(x));
  return r;
}

Endpoints endpoints(const std::vector<Node>& items) {
  if (items.empty()) return {};
  return {item_min(items.front()), item_max(items.back())};
}

std::size_t rank(const Tree3S& t) { return rank(t.parts()); }
Endpoints endpoints(const Tree3S& t) { return endpoints(t.parts()); }
bool is_discrete(const Tree3S& t) { return seq_discrete(t.parts()); }

std::optional<std::size_t> finite_size(const Tree3S& t) {
  for (const Node& x : t.parts())
    if (!x.is_leaf()) return std::nullopt;
  return t.width();
}

Tree3S derivative(const Tree3S& t) {
  Node r;
  r.children = seq_derivative(t.parts());
  return Tree3S::adopt(std::move(r));
}

Tree3S derivative(const Tree3S& t, std::size_t times) {
  Tree3S d = t;
  for (std::size_t i = 0; i < times; ++i) d = derivative(d);
  return d;
}

Tree3S remove_min(const Tree3S& t) {
  if (!endpoints(t).has_min)
    throw Error(ErrorKind::NotApplicable, "order has no least point");
  Node r = t.root();
  drop_min(r.children);
  return Tree3S::adopt(std::move(r));
}

Tree3S remove_max(const Tree3S& t) {
  if (!endpoints(t).has_max)
    throw Error(ErrorKind::NotApplicable, "order has no greatest point");
  Node r = t.root();
  drop_max(r.children);
  return Tree3S::adopt(std::move(r));
}

bool operator==(const Fingerprint& a, const Fingerprint& b) {
  if (a.rank != b.rank || a.has_min != b.has_min || a.has_max != b.has_max ||
      a.discrete != b.discrete || a.size != b.size)
    return false;
  if (!a.derivative || !b.derivative) return !a.derivative && !b.derivative;
  return *a.derivative == *b.derivative;
}

Fingerprint fingerprint(const Tree3S& t) {
  Fingerprint f;
  f.rank = rank(t);
  const Endpoints e = endpoints(t);
  f.has_min = e.has_min;
  f.has_max = e.has_max;
  f.discrete = is_discrete(t);
  f.size = finite_size(t);
  if (f.rank > 0)
    f.derivative = std::make_shared<const Fingerprint>(fingerprint(derivative(t)));
  return f;
}

nlohmann::json to_json(const Fingerprint& f) {
  nlohmann::json j;
  j["rank"] = f.rank;
  j["min"] = f.has_min;
  j["max"] = f.has_max;
  j["discrete"] = f.discrete;
  j["size"] = f.size ? nlohmann::json(*f.size) : nlohmann::json(nullptr);
  j["derivative"] =
      f.derivative ? to_json(*f.derivative) : nlohmann::json(nullptr);
  return j;
}

std::string to_string(const Fingerprint& f) {
  std::string out = "rank=" + std::to_string(f.rank) +
                    " min=" + (f.has_min ? "true" : "false") +
                    " max=" + (f.has_max ? "true" : "false") +
                    " discrete=" + (f.discrete ? "true" : "false");
  if (f.size) out += " size=" + std::to_string(*f.size);
  if (f.derivative) out += " | " + to_string(*f.derivative);
  return out;
}

}  // namespace lorder
