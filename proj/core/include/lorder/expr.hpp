#pragma once

// Surface syntax for finitely presented orders.
//
//   expr := sum ; sum := prod ("+" prod)* ; prod := atom ("*" atom)* ;
//   atom := "w-" | "w" | NAT | "(" expr ")"
//
// `a*b` is a copies of b, so "w*2" is omega x 2 = omega and "2*w" is
// omega + omega.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lorder/tree.hpp"

namespace lorder {

inline constexpr std::uint64_t kMaxLiteral = 1'000'000;

struct OrderExpr {
  enum class Kind { Sum, Prod, Omega, OmegaStar, Nat };

  Kind kind = Kind::Nat;
  std::uint64_t n = 0;            // Nat only
  std::vector<OrderExpr> items;   // Sum: >= 2 terms; Prod: left, right

  static OrderExpr nat(std::uint64_t v) { return {Kind::Nat, v, {}}; }
  static OrderExpr w() { return {Kind::Omega, 0, {}}; }
  static OrderExpr w_star() { return {Kind::OmegaStar, 0, {}}; }
  static OrderExpr sum(std::vector<OrderExpr> terms) {
    return {Kind::Sum, 0, std::move(terms)};
  }
  static OrderExpr prod(OrderExpr l, OrderExpr r) {
    std::vector<OrderExpr> v;
    v.push_back(std::move(l));
    v.push_back(std::move(r));
    return {Kind::Prod, 0, std::move(v)};
  }

  friend bool operator==(const OrderExpr&, const OrderExpr&) = default;
};

// Throws SyntaxError carrying the byte offset and the expected tokens.
OrderExpr parse(std::string_view text);

// Products are compiled away by right distributivity.
Tree3S to_tree(const OrderExpr& e);
Tree3S parse_tree(std::string_view text);

// Canonical spacing, minimal parentheses; parse(print(t)) rebuilds t exactly.
std::string print(const Tree3S& t);

// Debug form, e.g. "Prod(Omega, Sum[Omega, OmegaStar])".
std::string to_string(const OrderExpr& e);

}  // namespace lorder
