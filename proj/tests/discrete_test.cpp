#include <gtest/gtest.h>

#include "lorder/discrete.hpp"
#include "lorder/error.hpp"
#include "lorder/euclid.hpp"
#include "lorder/expr.hpp"
#include "lorder/invariants.hpp"

namespace lorder {
namespace {

Tree3S T(const char* e) { return parse_tree(e); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Syntax;  // sentinel: nothing thrown
}

TEST(Decompose, BothEnds) {
  const DiscreteForm f = discrete_decompose(T("w + w-"));
  EXPECT_EQ(f.shape, DiscreteShape::Both);
  EXPECT_TRUE(f.core.empty());
}

TEST(Decompose, MinOnly) {
  const DiscreteForm f = discrete_decompose(T("w*(w + w-)"));
  EXPECT_EQ(f.shape, DiscreteShape::MinOnly);
  EXPECT_TRUE(iso(f.core, omega()));
  EXPECT_TRUE(iso(reassemble(f), T("w + w*(w- + w)")));
}

TEST(Decompose, Errors) {
  EXPECT_EQ(kind_of([] { discrete_decompose(T("w*w")); }), ErrorKind::NotDiscrete);
  EXPECT_EQ(kind_of([] { discrete_decompose(finite(3)); }), ErrorKind::FiniteInput);
}

TEST(Decompose, ReassemblesEveryShape) {
  for (const char* e : {"w + w-", "w*(w + w-)", "w-*(w + w-)", "w*(w- + w)", "w + w-*(w*(w- + w)) + w-",
                        "w*w*(w- + w)", "w + (w- + w)*3 + w-"}) {
    const DiscreteForm f = discrete_decompose(T(e));
    EXPECT_TRUE(iso(reassemble(f), T(e))) << e << " " << to_string(f.shape);
  }
}

TEST(Alternating, SignedTrees) {
  EXPECT_TRUE(is_alternating(SignedTree{Sign::Plus, {{Sign::Plus, {}}, {Sign::Minus, {}}}}));
  EXPECT_FALSE(is_alternating(SignedTree{Sign::Plus, {{Sign::Plus, {}}, {Sign::Plus, {}}}}));
  EXPECT_TRUE(is_alternating(SignedTree{Sign::Minus, {}}));
  EXPECT_FALSE(is_alternating(SignedTree{Sign::Plus, {{Sign::Plus, {}}}}));
}

TEST(Alternating, ThreeSignedTrees) {
  EXPECT_TRUE(is_alternating(T("w + w- + w + w-")));
  EXPECT_FALSE(is_alternating(T("w- + w")));
  EXPECT_FALSE(is_alternating(T("w + w-*(w + w-) + w-")));
  EXPECT_TRUE(is_alternating(T("w + w- + w*(w + w-) + w-")));
}

TEST(Ast, RankOne) {
  EXPECT_EQ(to_string(ast_for_discrete_indec(omega())), "+");
  EXPECT_EQ(to_string(ast_for_discrete_indec(omega_star())), "-");
}

TEST(Ast, OmegaTimesZ) {
  EXPECT_EQ(to_string(ast_for_discrete_indec(T("w*(w- + w)"))), "+[+,-]");
  EXPECT_EQ(to_string(ast_for_discrete_indec(T("w-*(w- + w)"))), "-[+,-]");
}

TEST(Ast, RankMatchesInput) {
  for (const char* e : {"w*w*(w- + w)", "w*(w*(w- + w) + w-*(w- + w))", "w-*(w*(w- + w) + w-*(w- + w))"}) {
    const Tree3S t = T(e);
    const SignedTree s = ast_for_discrete_indec(t);
    EXPECT_TRUE(is_alternating(s)) << e;
    EXPECT_EQ(rank(embed_st(s)), rank(t)) << e;
    EXPECT_EQ(s.sign, t.parts()[0].sign) << e;
  }
}

TEST(Ast, Errors) {
  EXPECT_EQ(kind_of([] { ast_for_discrete_indec(T("w*w")); }), ErrorKind::NotDiscrete);
  EXPECT_EQ(kind_of([] { ast_for_discrete_indec(finite(2)); }), ErrorKind::NotIndecomposable);
  EXPECT_EQ(kind_of([] { ast_for_discrete_indec(T("w + w-")); }), ErrorKind::NotIndecomposable);
  EXPECT_EQ(kind_of([] { ast_for_discrete_indec(T("w-*w + w*w")); }), ErrorKind::NotDiscrete);
}

TEST(A3st, FixedPoint) { EXPECT_EQ(a3st_for_bounded_discrete(T("w + w-")), T("w + w-")); }

TEST(A3st, RegroupsZ) {
  const Tree3S out = a3st_for_bounded_discrete(T("w + (w- + w) + w-"));
  EXPECT_EQ(out, T("w + w- + w + w-"));
  EXPECT_TRUE(is_alternating(out));
}

TEST(A3st, NestedCore) {
  const Tree3S in = T("w + w*(1 + w)*(w- + w) + w-");
  const Tree3S out = a3st_for_bounded_discrete(in);
  EXPECT_TRUE(is_alternating(out));
  EXPECT_TRUE(iso(out, in));
}

TEST(A3st, Errors) {
  EXPECT_EQ(kind_of([] { a3st_for_bounded_discrete(T("w*w")); }), ErrorKind::NotDiscrete);
  EXPECT_EQ(kind_of([] { a3st_for_bounded_discrete(T("w*(w + w-)")); }), ErrorKind::Unbounded);
  EXPECT_EQ(a3st_for_bounded_discrete(finite(3)), finite(3));
}

}  // namespace
}  // namespace lorder
