#include "lorder/expr.hpp"

#include <cctype>

namespace lorder {

namespace {

const std::vector<std::string> kAtomStart = {"w", "w-", "NAT", "("};

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  OrderExpr run() {
    OrderExpr e = sum();
    skip();
    if (pos_ != s_.size()) fail({"+", "*", "end of input"});
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "syntax error at offset " + std::to_string(pos_) +
                      ": expected one of";
    for (const auto& e : expected) msg += " '" + e + "'";
    if (pos_ < s_.size()) {
      msg += ", found '";
      msg += s_[pos_];
      msg += "'";
    } else {
      msg += ", found end of input";
    }
    throw SyntaxError(pos_, std::move(expected), msg);
  }

  OrderExpr sum() {
    std::vector<OrderExpr> terms;
    terms.push_back(prod());
    while (eat('+')) terms.push_back(prod());
    if (terms.size() == 1) return std::move(terms.front());
    return OrderExpr::sum(std::move(terms));
  }

  OrderExpr prod() {
    OrderExpr e = atom();
    while (eat('*')) e = OrderExpr::prod(std::move(e), atom());
    return e;
  }

  OrderExpr atom() {
    skip();
    if (pos_ >= s_.size()) fail(kAtomStart);
    const char c = s_[pos_];
    if (c == 'w') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        ++pos_;
        return OrderExpr::w_star();
      }
      return OrderExpr::w();
    }
    if (c == '(') {
      ++pos_;
      OrderExpr e = sum();
      if (!eat(')')) fail({")", "+", "*"});
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    fail(kAtomStart);
  }

  OrderExpr number() {
    const std::size_t start = pos_;
    if (s_[pos_] == '0') {
      ++pos_;
      return OrderExpr::nat(0);
    }
    std::uint64_t v = 0;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
      if (v > kMaxLiteral) {
        pos_ = start;
        throw SyntaxError(start, {"NAT <= 1000000"},
                          "literal at offset " + std::to_string(start) +
                              " exceeds 1000000");
      }
    }
    return OrderExpr::nat(v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// A run of consecutive leaves starting at i.
std::size_t leaf_run(const std::vector<Node>& xs, std::size_t i) {
  std::size_t j = i;
  while (j < xs.size() && xs[j].is_leaf()) ++j;
  return j - i;
}

std::string print_seq(const std::vector<Node>& xs);

std::string print_lift(const Node& n) {
  std::string base = n.sign == Sign::Plus ? "w" : "w-";
  const auto& body = n.children;
  const std::size_t run = leaf_run(body, 0);
  if (run == body.size()) {
    if (run == 1) return base;
    return base + "*" + std::to_string(run);
  }
  if (body.size() == 1) return base + "*" + print_lift(body.front());
  return base + "*(" + print_seq(body) + ")";
}

std::string print_seq(const std::vector<Node>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size();) {
    if (!out.empty()) out += " + ";
    const std::size_t run = leaf_run(xs, i);
    if (run > 0) {
      out += std::to_string(run);
      i += run;
    } else {
      out += print_lift(xs[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace

OrderExpr parse(std::string_view text) { return Parser(text).run(); }

Tree3S to_tree(const OrderExpr& e) {
  switch (e.kind) {
    case OrderExpr::Kind::Nat: return finite(e.n);
    case OrderExpr::Kind::Omega: return omega();
    case OrderExpr::Kind::OmegaStar: return omega_star();
    case OrderExpr::Kind::Sum: {
      std::vector<Tree3S> parts;
      parts.reserve(e.items.size());
      for (const auto& x : e.items) parts.push_back(to_tree(x));
      return join(parts);
    }
    case OrderExpr::Kind::Prod:
      return multiply(to_tree(e.items[0]), to_tree(e.items[1]));
  }
  return Tree3S();
}

Tree3S parse_tree(std::string_view text) { return to_tree(parse(text)); }

std::string print(const Tree3S& t) {
  if (t.empty()) return "0";
  return print_seq(t.parts());
}

std::string to_string(const OrderExpr& e) {
  switch (e.kind) {
    case OrderExpr::Kind::Nat: return "Nat(" + std::to_string(e.n) + ")";
    case OrderExpr::Kind::Omega: return "Omega";
    case OrderExpr::Kind::OmegaStar: return "OmegaStar";
    case OrderExpr::Kind::Prod:
      return "Prod(" + to_string(e.items[0]) + ", " + to_string(e.items[1]) +
             ")";
    case OrderExpr::Kind::Sum: {
      std::string out = "Sum[";
      for (std::size_t i = 0; i < e.items.size(); ++i) {
        if (i) out += ", ";
        out += to_string(e.items[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

}  // namespace lorder
