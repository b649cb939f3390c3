#include <gtest/gtest.h>

#include "support.hpp"

using namespace sigmagrp;
using namespace testing_support;

TEST(Classify, Cyclic)
{
  EXPECT_TRUE(is_cyclic(Subgroup::whole(Group::from_generators({}, 2))));
  auto s4 = family("S4");
  EXPECT_TRUE(is_cyclic(sub(s4, {"(1 2 3 4)"})));
  EXPECT_FALSE(is_cyclic(sub(s4, {"(1 2)(3 4)", "(1 3)(2 4)"})));
  EXPECT_TRUE(is_cyclic(Subgroup::whole(family("C30"))));
  EXPECT_FALSE(is_cyclic(Subgroup::whole(family("S3xC3"))));
}

TEST(Classify, Nilpotent)
{
  EXPECT_TRUE(is_nilpotent(Subgroup::whole(family("D8"))));
  EXPECT_TRUE(is_nilpotent(Subgroup::whole(family("Q8"))));
  EXPECT_FALSE(is_nilpotent(Subgroup::whole(family("S3"))));
  EXPECT_TRUE(is_nilpotent(Subgroup::whole(family("C6"))));
  EXPECT_FALSE(is_nilpotent(Subgroup::whole(family("SL23"))));
}

TEST(Classify, Soluble)
{
  auto s4 = family("S4");
  SubgroupLattice l(s4);
  EXPECT_TRUE(is_soluble(s4, l));
  EXPECT_EQ(orders_of(derived_series(Subgroup::whole(s4))), (std::vector<std::uint64_t>{1, 4, 12, 24}));
  auto a5 = family("A5");
  EXPECT_FALSE(is_soluble(a5, SubgroupLattice(a5)));
  EXPECT_TRUE(is_soluble(Subgroup::whole(family("C12"))));
  EXPECT_THROW(is_soluble(a5, l), GroupError);
}

TEST(Classify, SupersolubleSymmetricThree)
{
  auto s3 = family("S3");
  auto res = is_supersoluble(s3, SubgroupLattice(s3));
  ASSERT_TRUE(res.supersoluble);
  ASSERT_TRUE(res.certificate);
  EXPECT_EQ(res.certificate->factor_orders, (std::vector<std::uint64_t>{3, 2}));
}

TEST(Classify, SupersolubleSymmetricFour)
{
  auto s4 = family("S4");
  SubgroupLattice l(s4);
  auto res = is_supersoluble(s4, l);
  EXPECT_FALSE(res.supersoluble);
  EXPECT_FALSE(res.certificate);
  EXPECT_FALSE(is_supersoluble_huppert(l));
  EXPECT_EQ(chief_series(l).factor_orders, (std::vector<std::uint64_t>{4, 3, 2}));
}

TEST(Classify, CyclicGroupsAreSupersoluble)
{
  for (auto name : {"C2", "C12", "C30", "C49"})
    EXPECT_TRUE(is_supersoluble(SubgroupLattice(family(name))).supersoluble) << name;
}

TEST(Classify, AlternatingFiveChiefSeries)
{
  SubgroupLattice l(family("A5"));
  EXPECT_EQ(chief_series(l).factor_orders, std::vector<std::uint64_t>{60});
  EXPECT_FALSE(is_supersoluble(l).supersoluble);
}

TEST(Classify, PNilpotent)
{
  auto s3 = family("S3");
  EXPECT_TRUE(is_p_nilpotent(s3, SubgroupLattice(s3), 2));
  EXPECT_FALSE(is_p_nilpotent(s3, SubgroupLattice(s3), 3));
  auto s4 = family("S4");
  SubgroupLattice l(s4);
  EXPECT_FALSE(is_p_nilpotent(s4, l, 2));
  EXPECT_TRUE(is_p_nilpotent(s4, l, 5));
  EXPECT_THROW(is_p_nilpotent(s4, l, 4), GroupError);
  auto sl = family("SL23");
  EXPECT_TRUE(is_p_nilpotent(sl, SubgroupLattice(sl), 3));
  EXPECT_FALSE(is_p_nilpotent(sl, SubgroupLattice(sl), 2));
}

TEST(ClassifyProperty, CrossOraclesOnCatalog)
{
  auto files = default_catalog();
  for (auto const &extra : builtin_catalog("A5, C6, D10, S3xS3, C2xC2xC2"))
    files.push_back(extra);
  for (auto const &f : files) {
    auto g = build_group(f);
    SubgroupLattice l(g);
    auto whole = Subgroup::whole(g);
    auto raw_g = oracle_closure(f);
    auto raw_subs = oracle::all_subgroups(raw_g);

    bool cyc = is_cyclic(whole), ab = is_abelian(whole), nil = is_nilpotent(whole);
    bool sol = is_soluble(whole);
    auto ss = is_supersoluble(l);

    EXPECT_EQ(cyc, oracle::cyclic(raw_g)) << f.name;
    EXPECT_EQ(ab, oracle::abelian(raw_g)) << f.name;
    EXPECT_EQ(nil, oracle::nilpotent(raw_subs, g->order())) << f.name;
    EXPECT_EQ(sol, oracle::soluble(raw_g)) << f.name;
    EXPECT_EQ(ss.supersoluble, oracle::supersoluble(raw_subs, raw_g)) << f.name;
    EXPECT_EQ(ss.supersoluble, is_supersoluble_huppert(l)) << f.name;

    EXPECT_TRUE(!cyc || ab);
    EXPECT_TRUE(!ab || nil);
    EXPECT_TRUE(!nil || ss.supersoluble);
    EXPECT_TRUE(!ss.supersoluble || sol);

    auto cs = chief_series(l);
    std::uint64_t product = 1;
    for (auto o : cs.factor_orders)
      product *= o;
    EXPECT_EQ(product, g->order());
    ASSERT_EQ(cs.series.size(), cs.factor_orders.size() + 1);
    for (std::size_t i = 0; i + 1 < cs.series.size(); ++i) {
      auto lo = cs.series[i], hi = cs.series[i + 1];
      ASSERT_TRUE(l.is_normal(lo) && l.is_normal(hi));
      ASSERT_TRUE(l.contains(hi, lo));
      for (std::size_t m : l.normal_indices()) {
        bool strictly_between = m != lo && m != hi && l.contains(hi, m) && l.contains(m, lo);
        ASSERT_FALSE(strictly_between) << f.name;
      }
    }
    if (ss.supersoluble) {
      ASSERT_TRUE(ss.certificate);
      for (auto o : ss.certificate->factor_orders)
        EXPECT_TRUE(is_prime(o));
    }
    for (auto p : prime_divisors(g->order())) {
      bool expected = false;
      for (std::size_t n : l.normal_indices())
        expected |= l[n].index() == p_part(g->order(), p) && l[n].order() % p != 0;
      EXPECT_EQ(is_p_nilpotent(l, p), expected) << f.name << " p=" << p;
    }
  }
}
