#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "lorder/error.hpp"
#include "lorder/euclid.hpp"
#include "lorder/expr.hpp"
#include "lorder/invariants.hpp"
#include "support.hpp"

namespace lorder {
namespace {

Tree3S T(const char* e) { return parse_tree(e); }

TEST(Split, Irreducibles) {
  const std::vector<Tree3S> p = split_irreducibles(T("w + w-"));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], omega());
  EXPECT_EQ(p[1], omega_star());
  EXPECT_EQ(split_irreducibles(T("w*w")).size(), 1u);
  EXPECT_TRUE(split_irreducibles(finite(0)).empty());
}

TEST(Prefix, Examples) {
  EXPECT_TRUE(is_prefix_embeddable(omega(), T("w*w")));
  EXPECT_FALSE(is_prefix_embeddable(omega_star(), omega()));
  EXPECT_TRUE(is_prefix_embeddable(T("w + 1"), T("w*w")));
  EXPECT_FALSE(is_prefix_embeddable(T("w*w"), omega()));
  EXPECT_TRUE(is_prefix_embeddable(finite(20), omega()));
  EXPECT_TRUE(is_prefix_embeddable(finite(0), omega_star()));
}

TEST(Suffix, Examples) {
  EXPECT_TRUE(is_suffix_embeddable(omega_star(), T("w-*w-")));
  EXPECT_FALSE(is_suffix_embeddable(omega(), omega_star()));
  EXPECT_TRUE(is_suffix_embeddable(T("w + 2"), T("w*w + w + 2")));
}

TEST(Prefix, WholeOrderEmbeds) {
  for (const Tree3S& t : testing::corpus_trees()) {
    EXPECT_TRUE(is_prefix_embeddable(t, t)) << print(t);
    EXPECT_TRUE(is_suffix_embeddable(t, t)) << print(t);
  }
}

// Prefix embedding of initial segments built by slicing.
TEST(Prefix, SlicesOfAJoinEmbed) {
  for (const char* e : {"w + w- + w*w", "1 + w*(w- + w) + 3", "w-*w + w + w-"}) {
    const Tree3S t = T(e);
    for (std::size_t k = 0; k <= t.width(); ++k) {
      EXPECT_TRUE(is_prefix_embeddable(slice(t, 0, k), t)) << e << " k=" << k;
      EXPECT_TRUE(is_suffix_embeddable(slice(t, k, t.width()), t)) << e << " k=" << k;
    }
  }
}

TEST(Iso, Examples) {
  EXPECT_TRUE(iso(T("w*(w + w-)"), T("w + w*(w- + w)")));
  EXPECT_FALSE(iso(T("w*(w + w-)"), T("w*(w- + w)")));
  EXPECT_TRUE(iso(T("w*2"), omega()));
  EXPECT_TRUE(iso(T("w*(1 + w)"), T("w*w")));
  EXPECT_FALSE(iso(T("w-+w + w-+w"), T("w-+w")));
}

TEST(Iso, FurtherInstances) {
  EXPECT_TRUE(iso(T("1 + w*w"), T("w*(1 + w)")));
  EXPECT_FALSE(iso(T("w + 1"), omega()));
  EXPECT_FALSE(iso(T("w*(2 + w-)"), T("w*(1 + w-)")));
  EXPECT_TRUE(iso(T("w-*(w- + 1)"), T("w-*w-")));
  EXPECT_TRUE(iso(T("w + w*w"), T("w*w")));
  EXPECT_FALSE(iso(T("w*w + w"), T("w*w")));
}

TEST(Divide, OmegaIntoTwoOmegas) {
  const auto d = euclid_divide(omega(), T("w + w"));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->k, 2u);
  EXPECT_TRUE(d->l1.empty());
  EXPECT_TRUE(iso(d->l2, omega()));
}

TEST(Divide, OmegaIntoOmegaPlusOne) {
  const auto d = euclid_divide(omega(), T("w + 1"));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->k, 1u);
  EXPECT_EQ(finite_size(d->l1), std::optional<std::size_t>(1));
  EXPECT_TRUE(iso(d->l2, omega()));
  EXPECT_TRUE(iso(lift(join(d->l1, d->l2), Sign::Plus), lift(join(d->l2, d->l1), Sign::Plus)));
}

TEST(Divide, NoAlignment) { EXPECT_FALSE(euclid_divide(omega(), omega_star()).has_value()); }

TEST(Divide, JsonShape) {
  const auto d = euclid_divide(omega(), T("w + w"));
  ASSERT_TRUE(d.has_value());
  const nlohmann::json j = to_json(*d);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["l1"], "0");
  EXPECT_EQ(j["l2"], "w");
}

TEST(OmegaPeriod, Recognition) {
  const auto p = omega_period(T("1 + w*(w + w-)"));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(iso(lift(*p, Sign::Plus), T("1 + w*(w + w-)")));
  // Every suffix of Z is Z or w, never a single point.
  EXPECT_FALSE(omega_period(T("1 + w*(w- + w)")).has_value());
  EXPECT_FALSE(omega_period(T("w + w-")).has_value());
  EXPECT_FALSE(omega_period(T("w*w + 1")).has_value());
  EXPECT_TRUE(omega_star_period(T("w-*w + w")).has_value());
}

TEST(Merge, Examples) {
  const auto a = merge_pair(finite(1), omega());
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(iso(*a, omega()));
  EXPECT_EQ(a->width(), 1u);
  EXPECT_FALSE(merge_pair(omega(), omega_star()).has_value());
  const auto b = merge_pair(omega(), T("w*(w- + w)"));
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(iso(*b, T("w*(w + w-)")));
}

TEST(Width, Examples) {
  EXPECT_EQ(width(omega()), 1u);
  EXPECT_EQ(width(T("w + w-")), 2u);
  EXPECT_EQ(width(T("w + w*w")), 1u);
  EXPECT_EQ(width(T("w + w- + w")), 3u);
  EXPECT_EQ(width(finite(0)), 0u);
  EXPECT_EQ(width(finite(1)), 1u);
  // 1 is the only finite irreducible.
  EXPECT_EQ(width(finite(7)), 7u);
  EXPECT_EQ(width(T("1 + w*(w- + w)")), 2u);
  EXPECT_EQ(width(T("w + w*(w- + w)")), 1u);
}

TEST(Width, DecompositionPartsReassemble) {
  for (const Tree3S& t : testing::corpus_trees()) {
    const std::vector<Tree3S> parts = minimal_decomposition(t);
    Tree3S whole;
    for (const Tree3S& p : parts) {
      EXPECT_EQ(p.width(), 1u);
      whole = join(whole, p);
    }
    EXPECT_TRUE(iso(whole, t)) << print(t);
  }
}

}  // namespace
}  // namespace lorder
