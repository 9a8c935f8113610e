#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "lorder/error.hpp"
#include "lorder/expr.hpp"
#include "lorder/tree.hpp"

namespace lorder {
namespace {

Node leaf() { return Node{}; }
Node lifted(Sign s, std::vector<Node> kids) { return Node{s, std::move(kids)}; }
Node root(std::vector<Node> kids) { return Node{Sign::Zero, std::move(kids)}; }

TEST(TreeValidate, SingleNodeIsTheEmptyOrder) {
  const Tree3S t = Tree3S::validate(Node{});
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(print(t), "0");
}

TEST(TreeValidate, OneLiftedLeafIsOmega) {
  const Tree3S t = Tree3S::validate(root({lifted(Sign::Plus, {leaf()})}));
  EXPECT_EQ(t, omega());
  EXPECT_EQ(print(t), "w");
}

TEST(TreeValidate, ZeroSignedInternalNodeReportsPath) {
  try {
    Tree3S::validate(root({lifted(Sign::Zero, {leaf()})}));
    FAIL() << "expected InvalidSign";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSign);
    EXPECT_NE(std::string(e.what()).find("[0]"), std::string::npos);
  }
}

TEST(TreeValidate, SignedLeafIsRejected) {
  EXPECT_THROW(Tree3S::validate(root({lifted(Sign::Minus, {})})), Error);
}

TEST(TreeValidate, SignedRootIsRejected) {
  EXPECT_THROW(Tree3S::validate(lifted(Sign::Plus, {leaf()})), Error);
}

TEST(TreeJoin, ConcatenatesRootChildren) {
  const Tree3S t = join(omega(), omega_star());
  EXPECT_EQ(print(t), "w + w-");
  EXPECT_EQ(t.width(), 2u);
}

TEST(TreeJoin, EmptyIsIdentity) {
  const Tree3S t = parse_tree("w*(w + 1)");
  EXPECT_EQ(join(finite(0), t), t);
  EXPECT_EQ(join(t, finite(0)), t);
}

TEST(TreeLift, LeafBecomesOmega) { EXPECT_EQ(lift(finite(1), Sign::Plus), omega()); }

TEST(TreeLift, SumUnderOmega) {
  EXPECT_EQ(print(lift(join(omega(), omega_star()), Sign::Plus)), "w*(w + w-)");
}

TEST(TreeLift, EmptyOperandAndZeroSign) {
  try {
    lift(finite(0), Sign::Plus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyOperand);
  }
  EXPECT_THROW(lift(omega(), Sign::Zero), Error);
}

TEST(TreeSubtree, PathZeroKeepsTheLift) {
  const Tree3S t = parse_tree("w*(w + w-)");
  EXPECT_EQ(subtree(t, {0}), t);
  EXPECT_EQ(print(hat_subtree(t, {0})), "w + w-");
}

TEST(TreeSubtree, Errors) {
  const Tree3S t = parse_tree("w*(w + w-)");
  try {
    subtree(t, {5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadPath);
  }
  try {
    hat_subtree(t, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RootNotAddressable);
  }
  EXPECT_THROW(hat_subtree(parse_tree("1 + w"), {0}), Error);
}

TEST(TreeEmbed, SingleNodes) {
  EXPECT_EQ(embed_st({Sign::Plus, {}}), omega());
  EXPECT_EQ(embed_st({Sign::Minus, {}}), omega_star());
}

TEST(TreeEmbed, PlusOverPlusMinus) {
  const SignedTree s{Sign::Plus, {{Sign::Plus, {}}, {Sign::Minus, {}}}};
  EXPECT_EQ(print(embed_st(s)), "w*(w + w-)");
  EXPECT_EQ(to_string(s), "+[+,-]");
}

TEST(TreeOps, RepeatMultiplyReverse) {
  EXPECT_EQ(print(repeat(omega(), 3)), "w + w + w");
  EXPECT_EQ(print(multiply(parse_tree("1 + w"), zee())), "w- + w + w*(w- + w)");
  EXPECT_EQ(print(reverse(parse_tree("w*(1 + w-)"))), "w-*(w + 1)");
  EXPECT_EQ(print(slice(parse_tree("w + 1 + w-"), 1, 3)), "1 + w-");
}

TEST(TreeOps, Measures) {
  const Tree3S t = parse_tree("w*(w- + w)");
  EXPECT_EQ(node_count(t), 6u);
  EXPECT_EQ(height(t), 3u);
  EXPECT_TRUE(valid_path(t, {0, 1, 0}));
  EXPECT_FALSE(valid_path(t, {0, 2}));
}

TEST(TreeHashing, EqualTreesHashEqual) {
  EXPECT_EQ(hash_value(parse_tree("w*(w + 1)")), hash_value(parse_tree("w*(w+1)")));
  EXPECT_NE(hash_value(omega()), hash_value(omega_star()));
}

TEST(TreeJson, RoundTrip) {
  const Tree3S t = parse_tree("w-*(w*(1 + w-) + 2)");
  EXPECT_EQ(tree_from_json(to_json(t)), t);
  EXPECT_EQ(tree_from_json(nlohmann::json::parse(to_json(t).dump())), t);
}

TEST(TreeJson, MalformedInput) {
  try {
    tree_from_json(nlohmann::json::parse(R"({"sign":"x","children":[]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadJson);
  }
  EXPECT_THROW(tree_from_json(nlohmann::json::parse(R"([1,2])")), Error);
}

}  // namespace
}  // namespace lorder
