#include <gtest/gtest.h>

#include "support.hpp"

using namespace sigmagrp;
using namespace testing_support;

TEST(Subgroup, GeneratedByAndLagrange)
{
  auto s4 = family("S4");
  auto h = sub(s4, {"(1 2 3 4)"});
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(h.index(), 6u);
  EXPECT_TRUE(h.contains(parse_permutation("(1 3)(2 4)", 4)));
  EXPECT_FALSE(h.contains(parse_permutation("(1 2)", 4)));
  EXPECT_THROW(sub(s4, {"(1 2)(3 4)"}).contains(parse_permutation("(1 2)", 3)), GroupError);
}

TEST(Subgroup, FromMembersRejectsNonSubgroup)
{
  auto s3 = family("S3");
  ElementSet set(s3->table().size());
  set.set(0);
  set.set(s3->id_of(parse_permutation("(1 2)", 3)));
  set.set(s3->id_of(parse_permutation("(1 3)", 3)));
  EXPECT_THROW(Subgroup::from_members(s3, set), GroupError);
}

TEST(Subgroup, NormalClosureExamples)
{
  auto s4 = family("S4");
  EXPECT_EQ(normal_closure(s4, sub(s4, {"(1 2)"})).order(), 24u);
  auto v4 = sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  EXPECT_EQ(normal_closure(s4, v4), v4);
  auto a4 = normal_closure(s4, sub(s4, {"(1 2 3)"}));
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_FALSE(a4.contains(parse_permutation("(1 2)", 4)));
}

TEST(Subgroup, QuotientByWholeIsTrivialOfDegreeOne)
{
  auto s4 = family("S4");
  auto q = quotient_group(s4, Subgroup::whole(s4));
  EXPECT_EQ(q.group()->order(), 1u);
  EXPECT_EQ(q.group()->degree(), 1u);
}

TEST(Subgroup, QuotientByTrivialPreservesOrder)
{
  auto d12 = family("D12");
  auto q = quotient_group(d12, Subgroup::trivial(d12));
  EXPECT_EQ(q.group()->order(), 12u);
}

TEST(Subgroup, QuotientByAlternating)
{
  auto s4 = family("S4");
  auto a4 = sub(s4, {"(1 2 3)", "(1 2 4)"});
  auto q = quotient_group(s4, a4);
  EXPECT_EQ(q.group()->order(), 2u);
  EXPECT_THROW(quotient_group(s4, sub(s4, {"(1 2)"})), GroupError);
}

TEST(Subgroup, QuotientIsAHomomorphism)
{
  for (auto name : {"S4", "SL23", "D12", "S3xC3", "Q8"}) {
    auto g = family(name);
    SubgroupLattice l(g);
    auto const &t = g->table();
    for (std::size_t n : l.normal_indices()) {
      auto q = quotient_group(l[n]);
      auto const &qt = q.group()->table();
      ASSERT_EQ(q.group()->order() * l[n].order(), g->order()) << name;
      for (ElementId a = 0; a < t.size(); ++a) {
        for (ElementId b : g->generator_ids())
          ASSERT_EQ(q.image(t.mul(a, b)), qt.mul(q.image(a), q.image(b)));
        ASSERT_EQ(q.image(a) == 0, l[n].contains(a));
      }
      for (std::size_t s = 0; s < l.size(); ++s) {
        if (l.contains(s, n)) {
          ASSERT_EQ(q.preimage_of(q.image_of(l[s])), l[s]);
        }
      }
    }
  }
}

TEST(Subgroup, ProductPermuting)
{
  auto s3 = family("S3");
  auto a = sub(s3, {"(1 2)"});
  auto b = sub(s3, {"(1 3)"});
  EXPECT_EQ(product_set(a, b).count(), 4u);
  EXPECT_FALSE(product_is_permuting(a, b));
  EXPECT_TRUE(product_is_permuting(a, a));
  EXPECT_TRUE(product_is_permuting(sub(s3, {"(1 2 3)"}), b));
}

TEST(Subgroup, NormalizerExamples)
{
  auto s3 = family("S3");
  auto t = sub(s3, {"(1 2)"});
  EXPECT_EQ(normalizer(t), t);
  auto s4 = family("S4");
  EXPECT_EQ(normalizer(sub(s4, {"(1 2 3)"})).order(), 6u);
  EXPECT_EQ(normalizer(sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"})).order(), 24u);
}

TEST(Subgroup, DerivedSubgroups)
{
  auto s4 = family("S4");
  auto series = derived_series(Subgroup::whole(s4));
  EXPECT_EQ(orders_of(series), (std::vector<std::uint64_t>{1, 4, 12, 24}));
  EXPECT_EQ(derived_subgroup(Subgroup::whole(family("Q8"))).order(), 2u);
  EXPECT_EQ(derived_subgroup(Subgroup::whole(family("SL23"))).order(), 8u);
}

TEST(Subgroup, IntersectionAndJoin)
{
  auto s4 = family("S4");
  auto a = sub(s4, {"(1 2)"});
  auto b = sub(s4, {"(3 4)"});
  EXPECT_EQ(join(a, b).order(), 4u);
  EXPECT_TRUE(intersection(a, b).is_trivial());
  EXPECT_EQ(join(a, sub(s4, {"(1 3)"})).order(), 6u);
}

TEST(Subgroup, ConjugateMatchesOracle)
{
  auto s4 = family("S4");
  auto h = sub(s4, {"(1 2 3 4)"});
  auto g = s4->id_of(parse_permutation("(1 2)", 4));
  EXPECT_EQ(raw(h.conjugate(g)), oracle::conjugate(raw(h), oracle::parse("(1 2)", 4)));
}

TEST(Subgroup, ForeignAmbientRejected)
{
  auto a = family("S3");
  auto b = family("S3");
  EXPECT_THROW(intersection(Subgroup::whole(a), Subgroup::whole(b)), GroupError);
}
