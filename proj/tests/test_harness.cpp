#include <gtest/gtest.h>

#include "support.hpp"

using namespace sigmagrp;
using namespace testing_support;

namespace
{

Subject subject(std::string const &name)
{
  return Subject(name, family(name));
}

SigmaProfile profile(Subject const &s, std::string const &sigma)
{
  return SigmaProfile(sigma_parse(sigma), s.group->order());
}

std::string sigma_texts(std::vector<SigmaPartition> const &family)
{
  std::string out;
  for (auto const &s : family)
    out += (out.empty() ? "" : " ") + s.to_string();
  return out;
}

std::vector<CatalogEntry> entries(std::string const &families)
{
  std::vector<CatalogEntry> out;
  for (auto const &f : builtin_catalog(families))
    out.push_back({f.name, emit_group_file(f)});
  return out;
}

} // namespace

TEST(SigmaFamily, Enumeration)
{
  EXPECT_EQ(sigma_texts(sigma_family({2, 3}, 2)), "2,3 2|3");
  EXPECT_EQ(sigma_texts(sigma_family({2, 3}, 1)), "2,3");
  EXPECT_EQ(sigma_family({2, 3, 5}, 3).size(), 5u);
  EXPECT_EQ(sigma_family({2, 3, 5}, 2).size(), 4u);
  EXPECT_EQ(sigma_family({2, 3, 5, 7}, 4).size(), 15u);
  EXPECT_EQ(sigma_texts(sigma_family({2}, 3)), "2");
  EXPECT_EQ(sigma_texts(sigma_family({}, 3)), "");
  EXPECT_EQ(sigma_family({}, 3).size(), 1u);
  EXPECT_THROW(sigma_family({2}, 0), GroupError);
}

TEST(StatementIds, RoundTrip)
{
  for (auto s : all_statements)
    EXPECT_EQ(statement_from_id(statement_id(s)), s);
  EXPECT_FALSE(statement_from_id("L9.9"));
  EXPECT_EQ(status_name(Status::hypothesis_not_met), "hypothesis-not-met");
}

TEST(SylowizerRestriction, Examples)
{
  auto s3 = subject("S3");
  auto r = check_sylowizer_restriction(s3, profile(s3, "2|3"));
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_GE(r.stats.positive_cases, 1u);

  Subject one("one", Group::from_generators({}, 1));
  auto t = check_sylowizer_restriction(one, SigmaProfile(sigma_parse("2|3"), 1));
  EXPECT_EQ(t.status, Status::verified);
  EXPECT_EQ(t.stats.cases_checked, 1u);

  auto s4 = subject("S4");
  EXPECT_EQ(check_sylowizer_restriction(s4, profile(s4, "2|3")).status, Status::verified);
}

TEST(SylowizerRestriction, SamplingIsRecorded)
{
  auto s4 = subject("S4");
  CheckOptions opts;
  opts.restriction_full_limit = 10;
  auto r = check_sylowizer_restriction(s4, profile(s4, "2|3"), opts);
  EXPECT_TRUE(r.stats.sampled);
  EXPECT_EQ(r.stats.stride, 3u);
  auto full = check_sylowizer_restriction(s4, profile(s4, "2|3"));
  EXPECT_FALSE(full.stats.sampled);
  EXPECT_LT(r.stats.cases_checked, full.stats.cases_checked);
}

TEST(QuotientCorrespondence, Examples)
{
  auto s4 = subject("S4");
  auto r = check_quotient_correspondence(s4, profile(s4, "2|3"));
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_GT(r.stats.positive_cases, 0u);

  // The documented instance: N = V4, R a Sylow 3-subgroup, R Hall in RN.
  auto const &l = s4.lattice;
  auto v4 = sub(s4.group, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto r3 = sub(s4.group, {"(1 2 3)"});
  auto rn = Subgroup::from_members(s4.group, product_set(r3, v4));
  EXPECT_EQ(rn.order(), 12u);
  EXPECT_TRUE(is_hall_in(rn, r3, PrimeBlock::of({3})));
  auto q = quotient_group(v4);
  SubgroupLattice ql(q.group());
  auto in_g = sylowizers({l, r3, PrimeBlock::of({3})});
  auto in_q = sylowizers({ql, q.image_of(r3), PrimeBlock::of({3})});
  ASSERT_EQ(in_g.size(), in_q.size());
  for (auto const &s : in_g)
    EXPECT_TRUE(std::count(in_q.begin(), in_q.end(), q.image_of(s)));

  auto c7 = subject("C7");
  EXPECT_EQ(check_quotient_correspondence(c7, profile(c7, "7")).status, Status::verified);
}

TEST(PermutableSylowizer, CyclicSix)
{
  auto c6 = subject("C6");
  auto r = check_permutable_sylowizer(c6, profile(c6, "2|3"));
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_GT(r.stats.positive_cases, 0u);

  auto const &l = c6.lattice;
  auto s = sylowizers({l, Subgroup::trivial(c6.group), PrimeBlock::of({2})});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].order(), 3u);
  EXPECT_EQ(o_upper_sigma(l, PrimeBlock::of({2})), s[0]);
}

TEST(PermutableSylowizer, SymmetricFourSylowThree)
{
  auto s4 = subject("S4");
  auto p = profile(s4, "2|3");
  auto s = sylowizers({s4.lattice, sub(s4.group, {"(1 2 3)"}), PrimeBlock::of({3})});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s[0].is_whole());
  EXPECT_TRUE(is_sigma_permutable(s4.lattice, s[0], p).permutable);
  EXPECT_TRUE(o_upper_sigma(s4.lattice, PrimeBlock::of({3})).is_whole());
  EXPECT_EQ(check_permutable_sylowizer(s4, p).status, Status::verified);
}

TEST(PermutableSylowizer, NotSigmaFull)
{
  auto a5 = subject("A5");
  auto r = check_permutable_sylowizer(a5, profile(a5, "2,5|3"));
  EXPECT_EQ(r.status, Status::hypothesis_not_met);
  EXPECT_EQ(r.witness["obligation"], "sigma-full");
}

TEST(CPermutableIffIndex, SymmetricFourExamples)
{
  auto s4 = subject("S4");
  auto p = profile(s4, "2|3");
  auto r = check_c_permutable_iff_index(s4, p);
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_GT(r.stats.positive_cases, 0u);

  auto const &l = s4.lattice;
  auto halls = hall_subgroups(l, PrimeBlock::of({2}));
  for (auto const &h : hall_subgroups(l, PrimeBlock::of({3})))
    halls.push_back(h);
  auto all_cperm = [&](Subgroup const &s) {
    return std::all_of(halls.begin(), halls.end(),
                       [&](Subgroup const &h) { return is_c_permutable(s, h).permutable; });
  };

  auto v4 = sub(s4.group, {"(1 2)(3 4)", "(1 3)(2 4)"});
  auto sv = sylowizers({l, v4, PrimeBlock::of({2})});
  ASSERT_EQ(sv.size(), 1u);
  EXPECT_EQ(sv[0].order(), 12u);
  EXPECT_TRUE(all_cperm(sv[0]));
  EXPECT_TRUE(is_sigma_i_number(sv[0].index(), PrimeBlock::of({2})));

  auto c4 = sub(s4.group, {"(1 2 3 4)"});
  auto sc = sylowizers({l, c4, PrimeBlock::of({2})});
  ASSERT_EQ(sc.size(), 1u);
  EXPECT_EQ(sc[0], c4);
  EXPECT_FALSE(all_cperm(sc[0]));
  EXPECT_FALSE(is_sigma_i_number(sc[0].index(), PrimeBlock::of({2})));
}

TEST(CPermutableIffIndex, SingleBlock)
{
  auto s4 = subject("S4");
  EXPECT_EQ(check_c_permutable_iff_index(s4, profile(s4, "2,3")).status, Status::verified);
  auto a5 = subject("A5");
  auto r = check_c_permutable_iff_index(a5, profile(a5, "2,5|3"));
  EXPECT_EQ(r.status, Status::hypothesis_not_met);
  EXPECT_EQ(r.witness["reason"], "no Hall subgroup for the block");
}

TEST(SupersolubleCriterion, SymmetricThreeHolds)
{
  auto s3 = subject("S3");
  auto r = check_supersoluble_criterion(s3, profile(s3, "2|3"));
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_EQ(r.stats.positive_cases, 1u);
  EXPECT_EQ(r.witness["chief_factors"], Json::array({3, 2}));
}

TEST(SupersolubleCriterion, SymmetricFourFails)
{
  auto s4 = subject("S4");
  auto r = check_supersoluble_criterion(s4, profile(s4, "2|3"));
  ASSERT_EQ(r.status, Status::hypothesis_not_met);
  auto const &w = r.witness;
  EXPECT_EQ(w["obligation"], "sylowizer c-permutable with every Hall member");
  EXPECT_EQ(w["block"], "2");
  EXPECT_EQ(w["non_cyclic_subgroup"]["order"], 8);
  EXPECT_EQ(w["maximal_subgroup"]["order"], 4);

  // Re-evaluate the witness through the public predicates.
  std::vector<std::string> gens = w["maximal_subgroup"]["gens"];
  auto m = sub(s4.group, gens);
  EXPECT_EQ(m, sub(s4.group, {"(1 2)", "(3 4)"}));
  auto syl = sylowizers({s4.lattice, m, PrimeBlock::of({2})});
  ASSERT_EQ(syl.size(), 1u);
  EXPECT_EQ(syl[0].index(), 6u);
  for (auto const &t : hall_subgroups(s4.lattice, PrimeBlock::of({3})))
    EXPECT_FALSE(is_c_permutable(syl[0], t).permutable);
  EXPECT_FALSE(is_supersoluble(s4.lattice).supersoluble);
}

TEST(SupersolubleCriterion, CyclicGroupsAlwaysVerified)
{
  for (auto name : {"C12", "C30", "C8"}) {
    auto c = subject(name);
    for (auto const &sigma : sigma_family(prime_divisors(c.group->order()), 3)) {
      auto r = check_supersoluble_criterion(c, SigmaProfile(sigma, c.group->order()));
      EXPECT_EQ(r.status, Status::verified) << name << " " << sigma.to_string();
    }
  }
}

TEST(FormationCriterion, SymmetricThreeWithCyclicThree)
{
  auto s3 = subject("S3");
  auto r = check_formation_criterion(s3, profile(s3, "2|3"), sub(s3.group, {"(1 2 3)"}));
  EXPECT_EQ(r.status, Status::verified);
  EXPECT_EQ(r.stats.positive_cases, 1u);
}

TEST(FormationCriterion, SymmetricFourWithAlternating)
{
  auto s4 = subject("S4");
  auto r = check_formation_criterion(s4, profile(s4, "2|3"), sub(s4.group, {"(1 2 3)", "(1 2 4)"}));
  ASSERT_EQ(r.status, Status::hypothesis_not_met);
  EXPECT_EQ(r.witness["non_cyclic_subgroup"]["order"], 4);
  std::vector<std::string> gens = r.witness["maximal_subgroup"]["gens"];
  auto m = sub(s4.group, gens);
  EXPECT_EQ(m.order(), 2u);
  auto syl = sylowizers({s4.lattice, m, PrimeBlock::of({2})});
  ASSERT_EQ(syl.size(), 1u);
  EXPECT_EQ(syl[0].index(), 12u);
}

TEST(FormationCriterion, QuotientMustBeSupersoluble)
{
  auto s4 = subject("S4");
  auto r = check_formation_criterion(s4, profile(s4, "2|3"), Subgroup::trivial(s4.group));
  EXPECT_EQ(r.status, Status::hypothesis_not_met);
  EXPECT_EQ(r.witness["obligation"], "G/E supersoluble");
}

TEST(FormationCriterion, RejectsNonNormal)
{
  auto s4 = subject("S4");
  EXPECT_THROW(check_formation_criterion(s4, profile(s4, "2|3"), sub(s4.group, {"(1 2)"})),
               GroupError);
}

TEST(FormationCriterion, WholeGroupMatchesSupersolubleCriterion)
{
  for (auto const &f : default_catalog()) {
    Subject s(f.name, build_group(f));
    for (auto const &sigma : sigma_family(prime_divisors(s.group->order()), 3)) {
      SigmaProfile p(sigma, s.group->order());
      auto a = check_supersoluble_criterion(s, p);
      auto b = check_formation_criterion(s, p, Subgroup::whole(s.group));
      EXPECT_EQ(a.status, b.status) << f.name << " " << sigma.to_string();
    }
  }
}

TEST(RunCatalog, SymmetricThreeTwoBlocks)
{
  RunConfig config;
  config.max_blocks = 2;
  auto result = run_catalog(entries("S3"), config);
  EXPECT_EQ(result.reports.size(), 12u);
  EXPECT_EQ(result.summary.counterexamples, 0u);
  EXPECT_EQ(result.exit_status(), 0);
  for (auto const &r : result.reports)
    if (r.status == Status::verified) {
      EXPECT_GE(r.stats.cases_checked, 1u);
    }
}

TEST(RunCatalog, Empty)
{
  auto result = run_catalog({}, RunConfig{});
  EXPECT_TRUE(result.reports.empty());
  EXPECT_TRUE(result.summary.by_statement.empty());
  EXPECT_EQ(result.summary.counterexamples, 0u);
  EXPECT_EQ(result.summary.to_json()["counterexamples"], 0);
}

TEST(RunCatalog, DefaultCatalogHasNoCounterexamples)
{
  RunConfig config;
  config.workers = 0;
  auto result = run_catalog(entries("S3, S4, A4, D8, Q8, C12"), config);
  EXPECT_EQ(result.summary.counterexamples, 0u);
  EXPECT_TRUE(result.summary.skipped.empty());
  EXPECT_EQ(result.summary.by_statement.size(), 6u);
}

TEST(RunCatalog, OrderingAndSkipping)
{
  auto catalog = entries("S4, C6");
  catalog.push_back({"broken", "name: bad\ndegree: 3\ngens: (1 4)"});
  catalog.push_back({"dup", emit_group_file(family_file("C6"))});
  RunConfig config;
  config.statements = {Statement::formation_criterion, Statement::sylowizer_restriction};
  auto result = run_catalog(catalog, config);
  ASSERT_EQ(result.summary.skipped.size(), 2u);
  EXPECT_EQ(result.summary.skipped[0].first, "broken");
  EXPECT_EQ(result.summary.skipped[1].first, "dup");
  std::vector<std::string> keys;
  for (auto const &r : result.reports)
    keys.push_back(r.group + " " + r.sigma + " " + std::string(statement_id(r.statement)));
  EXPECT_EQ(keys, (std::vector<std::string>{"C6 2,3 L2.1", "C6 2,3 T2.6", "C6 2|3 L2.1",
                                            "C6 2|3 T2.6", "S4 2,3 L2.1", "S4 2,3 T2.6",
                                            "S4 2|3 L2.1", "S4 2|3 T2.6"}));
}

TEST(RunCatalog, ExplicitNormalSubgroup)
{
  RunConfig config;
  config.statements = {Statement::formation_criterion};
  config.normal_e = std::vector<std::string>{"(1 2 3)"};
  auto result = run_catalog(entries("S3"), config);
  ASSERT_EQ(result.reports.size(), 2u);
  EXPECT_EQ(result.reports[1].sigma, "2|3");
  EXPECT_EQ(result.reports[1].status, Status::verified);
  EXPECT_EQ(result.reports[1].witness["E"]["order"], 3);

  config.normal_e = std::vector<std::string>{"(1 2)"};
  auto bad = run_catalog(entries("S3"), config);
  EXPECT_TRUE(bad.reports.empty());
  EXPECT_EQ(bad.summary.skipped.size(), 1u);
}

TEST(RunCatalog, ParallelMatchesSerial)
{
  RunConfig serial;
  serial.workers = 1;
  RunConfig parallel;
  parallel.workers = 8;
  auto catalog = entries(default_catalog_families);
  auto a = run_catalog(catalog, serial);
  auto b = run_catalog(catalog, parallel);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i)
    ASSERT_EQ(to_line(a.reports[i]), to_line(b.reports[i]));
  EXPECT_EQ(a.summary.to_json(), b.summary.to_json());
}

TEST(Report, JsonKeyOrderIsStable)
{
  auto s3 = subject("S3");
  auto line = to_line(check_supersoluble_criterion(s3, profile(s3, "2|3")));
  auto pos = [&](std::string const &k) { return line.find("\"" + k + "\""); };
  EXPECT_EQ(pos("statement"), 1u);
  EXPECT_LT(pos("statement"), pos("group"));
  EXPECT_LT(pos("group"), pos("sigma"));
  EXPECT_LT(pos("sigma"), pos("status"));
  EXPECT_LT(pos("status"), pos("witness"));
  EXPECT_LT(pos("witness"), pos("stats"));
  EXPECT_EQ(Json::parse(line)["status"], "verified");
}

TEST(HarnessProperty, WorkspaceSigmaPermutabilityMatchesLibrary)
{
  for (auto const &f : default_catalog()) {
    Subject s(f.name, build_group(f));
    for (auto const &sigma : sigma_family(prime_divisors(s.group->order()), 3)) {
      SigmaProfile p(sigma, s.group->order());
      detail::Workspace ws(s, p);
      for (std::size_t a = 0; a < s.lattice.size(); ++a)
        ASSERT_EQ(ws.sigma_permutable(a), is_sigma_permutable(s.lattice, s.lattice[a], p).permutable);
    }
  }
}
