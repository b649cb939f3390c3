#ifndef SIGMAGRP_HARNESS_HPP
#define SIGMAGRP_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "catalog.hpp"
#include "classify.hpp"
#include "report.hpp"
#include "sylowizer.hpp"

namespace sigmagrp
{

/// A named group with its subgroup lattice, shared by all checks on it.
struct Subject
{
  Subject(std::string name_, GroupPtr group_)
  : name(std::move(name_)), group(group_), lattice(std::move(group_))
  {}

  std::string name;
  GroupPtr group;
  SubgroupLattice lattice;
};

struct CheckOptions
{
  /// The restriction check visits every sigma_i-subgroup H when the lattice
  /// has at most this many subgroups, and every stride-th one otherwise.
  std::size_t restriction_full_limit = 60;
};

namespace detail
{

/// Per-(group, sigma) caches used by the checkers. Not shared across threads.
class Workspace
{
public:
  Workspace(Subject const &subject, SigmaProfile const &profile)
  : subject_(subject), profile_(profile), l_(subject.lattice)
  {
    for (auto const &a : profile_.active())
      blocks_.push_back(a.block);
    labels_.reserve(blocks_.size());
    for (auto const &a : profile_.active())
      labels_.push_back(a.label());
    // The trivial group meets no block; its checks run over the first block
    // so that the single instantiation 1 <= 1 <= 1 is still counted.
    if (blocks_.empty()) {
      blocks_.push_back(profile_.partition().blocks().front());
      labels_.push_back(blocks_.back().to_string());
    }
    sigma_subgroups_.resize(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (std::size_t i = 0; i < l_.size(); ++i) {
        if (is_sigma_i_number(l_[i].order(), blocks_[b]))
          sigma_subgroups_[b].push_back(i);
      }
    }
  }

  Subject const &subject() const { return subject_; }
  SigmaProfile const &profile() const { return profile_; }
  SubgroupLattice const &lattice() const { return l_; }

  std::size_t block_count() const { return blocks_.size(); }
  PrimeBlock const &block(std::size_t b) const { return blocks_[b]; }
  std::string const &label(std::size_t b) const { return labels_[b]; }
  std::vector<std::size_t> const &sigma_subgroups(std::size_t b) const
  {
    return sigma_subgroups_[b];
  }

  std::vector<std::size_t> const &sylowizers(std::size_t k, std::size_t r, std::size_t b)
  {
    auto key = std::make_tuple(k, r, b);
    auto it = sylowizers_.find(key);
    if (it == sylowizers_.end())
      it = sylowizers_.emplace(key, sylowizer_indices(l_, k, r, blocks_[b])).first;
    return it->second;
  }

  std::vector<std::size_t> const &sylowizers_in_whole(std::size_t r, std::size_t b)
  {
    return sylowizers(l_.whole_index(), r, b);
  }

  bool c_permutable(std::size_t h, std::size_t t)
  {
    auto key = std::make_pair(h, t);
    auto it = cperm_.find(key);
    if (it == cperm_.end())
      it = cperm_.emplace(key, is_c_permutable(l_[h], l_[t]).permutable).first;
    return it->second;
  }

  bool permuting(std::size_t a, std::size_t b)
  {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = perm_.find(key);
    if (it == perm_.end())
      it = perm_.emplace(key, product_is_permuting(l_[a], l_[b])).first;
    return it->second;
  }

  std::vector<std::size_t> const &conjugacy_class(std::size_t i)
  {
    auto it = classes_.find(i);
    if (it == classes_.end())
      it = classes_.emplace(i, l_.conjugacy_class(i)).first;
    return it->second;
  }

  /// Some complete Hall set has every member's every conjugate permuting
  /// with subgroup a.
  bool sigma_permutable(std::size_t a)
  {
    for (auto const &act : profile_.active()) {
      bool found = false;
      for (std::size_t h : hall_indices(l_, act.block)) {
        auto const &cls = conjugacy_class(h);
        if (std::all_of(cls.begin(), cls.end(),
                        [&](std::size_t c) { return permuting(a, c); })) {
          found = true;
          break;
        }
      }
      if (!found)
        return false;
    }
    return true;
  }

  Json subgroup(std::size_t i) const { return subgroup_json(l_[i]); }

  Json hall_set(HallSet const &h) const
  {
    Json out = Json::array();
    for (std::size_t k = 0; k < h.members.size(); ++k) {
      Json m;
      m["block"] = profile_.active()[k].label();
      m["subgroup"] = subgroup(h.members[k]);
      out.push_back(std::move(m));
    }
    return out;
  }

private:
  struct TupleHash
  {
    std::size_t operator()(std::tuple<std::size_t, std::size_t, std::size_t> const &t) const
    {
      auto [a, b, c] = t;
      return (a * 1000003u + b) * 1000003u + c;
    }
  };
  struct PairHash
  {
    std::size_t operator()(std::pair<std::size_t, std::size_t> const &p) const
    {
      return p.first * 1000003u + p.second;
    }
  };

  Subject const &subject_;
  SigmaProfile const &profile_;
  SubgroupLattice const &l_;
  std::vector<PrimeBlock> blocks_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> sigma_subgroups_;
  std::unordered_map<std::tuple<std::size_t, std::size_t, std::size_t>,
                     std::vector<std::size_t>, TupleHash> sylowizers_;
  std::unordered_map<std::pair<std::size_t, std::size_t>, bool, PairHash> cperm_;
  std::unordered_map<std::pair<std::size_t, std::size_t>, bool, PairHash> perm_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> classes_;
};

inline VerificationReport start_report(Statement s, Workspace const &ws)
{
  VerificationReport r;
  r.statement = s;
  r.group = ws.subject().name;
  r.group_order = ws.subject().group->order();
  r.sigma = ws.profile().partition().to_string();
  return r;
}

inline Json index_list(Workspace const &ws, std::vector<std::size_t> const &ids)
{
  Json out = Json::array();
  for (std::size_t i : ids)
    out.push_back(ws.subgroup(i));
  return out;
}

inline Json sylow_type_witness(Workspace const &ws, SylowTypeFailure const &f)
{
  using Reason = SylowTypeFailure::Reason;
  Json w;
  w["obligation"] = "sigma-full of Sylow type";
  w["block"] = ws.profile().active()[f.active_block].label();
  switch (f.reason) {
  case Reason::no_hall:
    w["reason"] = "no Hall subgroup for the block";
    break;
  case Reason::not_conjugate:
    w["reason"] = "Hall subgroup not conjugate to the first one";
    w["subgroup"] = ws.subgroup(f.subgroup);
    break;
  case Reason::not_covered:
    w["reason"] = "block-subgroup contained in no Hall subgroup";
    w["subgroup"] = ws.subgroup(f.subgroup);
    break;
  }
  return w;
}

} // namespace detail

/// For every block, block-subgroup H, overgroup K and sylowizer T of H in K:
/// some sylowizer S of H in G satisfies T = S n K.
inline VerificationReport check_sylowizer_restriction(Subject const &subject,
                                                      SigmaProfile const &profile,
                                                      CheckOptions const &options = {})
{
  detail::Workspace ws(subject, profile);
  auto const &l = ws.lattice();
  auto report = detail::start_report(Statement::sylowizer_restriction, ws);
  if (l.size() > options.restriction_full_limit) {
    report.stats.sampled = true;
    report.stats.stride =
      (l.size() + options.restriction_full_limit - 1) / options.restriction_full_limit;
  }

  for (std::size_t b = 0; b < ws.block_count(); ++b) {
    auto const &hs = ws.sigma_subgroups(b);
    for (std::size_t n = 0; n < hs.size(); n += report.stats.stride) {
      std::size_t h = hs[n];
      auto const &in_g = ws.sylowizers_in_whole(h, b);
      for (std::size_t k : l.overgroups_of(h)) {
        for (std::size_t t : ws.sylowizers(k, h, b)) {
          ++report.stats.cases_checked;
          ++report.stats.positive_cases;
          bool ok = std::any_of(in_g.begin(), in_g.end(), [&](std::size_t s) {
            return l.intersection_index(s, k) == t;
          });
          if (!ok) {
            report.status = Status::counterexample;
            report.witness = {{"block", ws.label(b)},
                              {"H", ws.subgroup(h)},
                              {"K", ws.subgroup(k)},
                              {"T", ws.subgroup(t)},
                              {"sylowizers_in_G", detail::index_list(ws, in_g)}};
            return report;
          }
        }
      }
    }
  }
  return report;
}

/// For normal N and block-subgroup R that is Hall in RN: S is a sylowizer of
/// R in G iff S/N is a sylowizer of RN/N in G/N. Both directions are matched
/// through the quotient epimorphism.
inline VerificationReport check_quotient_correspondence(Subject const &subject,
                                                        SigmaProfile const &profile)
{
  detail::Workspace ws(subject, profile);
  auto const &l = ws.lattice();
  auto report = detail::start_report(Statement::quotient_correspondence, ws);

  for (std::size_t n : l.normal_indices()) {
    auto quotient = quotient_group(l[n]);
    SubgroupLattice ql(quotient.group());
    for (std::size_t b = 0; b < ws.block_count(); ++b) {
      auto const &block = ws.block(b);
      for (std::size_t r : ws.sigma_subgroups(b)) {
        ++report.stats.cases_checked;
        std::size_t rn = l.find(product_set(l[r], l[n]));
        if (!is_sigma_i_prime_number(l[rn].order() / l[r].order(), block))
          continue;
        ++report.stats.positive_cases;

        auto const &in_g = ws.sylowizers_in_whole(r, b);
        std::size_t r_bar = ql.index_of(quotient.image_of(l[r]));
        auto in_q = sylowizer_indices(ql, ql.whole_index(), r_bar, block);

        auto fail = [&](std::string const &direction, std::size_t s, Json s_bar) {
          report.status = Status::counterexample;
          report.witness = {{"direction", direction},
                            {"block", ws.label(b)},
                            {"N", ws.subgroup(n)},
                            {"R", ws.subgroup(r)},
                            {"S", ws.subgroup(s)},
                            {"S_mod_N", std::move(s_bar)}};
        };

        for (std::size_t s : in_g) {
          if (!l.contains(s, n)) {
            fail("sylowizer does not contain N", s, nullptr);
            return report;
          }
          auto image = quotient.image_of(l[s]);
          std::size_t s_bar = ql.index_of(image);
          if (std::find(in_q.begin(), in_q.end(), s_bar) == in_q.end()) {
            fail("image of a sylowizer is not a sylowizer in G/N", s, subgroup_json(image));
            return report;
          }
        }
        for (std::size_t s_bar : in_q) {
          std::size_t s = l.index_of(quotient.preimage_of(ql[s_bar]));
          if (std::find(in_g.begin(), in_g.end(), s) == in_g.end()) {
            fail("preimage of a sylowizer in G/N is not a sylowizer", s,
                 subgroup_json(ql[s_bar]));
            return report;
          }
        }
      }
    }
  }
  return report;
}

/// In a sigma-full group: every sigma-permutable sylowizer S of R contains
/// O^{sigma_i}(G), equals R O^{sigma_i}(G) and is R's only sylowizer.
inline VerificationReport check_permutable_sylowizer(Subject const &subject,
                                                     SigmaProfile const &profile)
{
  detail::Workspace ws(subject, profile);
  auto const &l = ws.lattice();
  auto report = detail::start_report(Statement::permutable_sylowizer, ws);

  for (std::size_t b = 0; b < profile.active().size(); ++b) {
    if (hall_indices(l, profile.active()[b].block).empty()) {
      report.status = Status::hypothesis_not_met;
      report.witness = {{"obligation", "sigma-full"},
                        {"block", profile.active()[b].label()},
                        {"reason", "no Hall subgroup for the block"}};
      return report;
    }
  }

  for (std::size_t b = 0; b < ws.block_count(); ++b) {
    std::size_t o = l.index_of(o_upper_sigma(l, ws.block(b)));
    for (std::size_t r : ws.sigma_subgroups(b)) {
      auto const &syl = ws.sylowizers_in_whole(r, b);
      for (std::size_t s : syl) {
        ++report.stats.cases_checked;
        if (!ws.sigma_permutable(s))
          continue;
        ++report.stats.positive_cases;

        std::string failure;
        if (!l.contains(s, o))
          failure = "O^sigma_i(G) is not contained in S";
        else if (product_set(l[r], l[o]) != l[s].members())
          failure = "S differs from R O^sigma_i(G)";
        else if (syl.size() != 1)
          failure = "R has more than one sylowizer";
        if (!failure.empty()) {
          report.status = Status::counterexample;
          report.witness = {{"failure", failure},
                            {"block", ws.label(b)},
                            {"R", ws.subgroup(r)},
                            {"S", ws.subgroup(s)},
                            {"O_sigma_i", ws.subgroup(o)},
                            {"sylowizers", detail::index_list(ws, syl)}};
          return report;
        }
      }
    }
  }
  return report;
}

/// In a sigma-full group of Sylow type: a sylowizer S of R is c-permutable
/// with every Hall sigma_j-subgroup iff |G:S| is a sigma_i-number.
inline VerificationReport check_c_permutable_iff_index(Subject const &subject,
                                                       SigmaProfile const &profile)
{
  detail::Workspace ws(subject, profile);
  auto const &l = ws.lattice();
  auto report = detail::start_report(Statement::c_permutable_iff_index, ws);

  if (auto f = sylow_type_failure(l, profile)) {
    report.status = Status::hypothesis_not_met;
    report.witness = detail::sylow_type_witness(ws, *f);
    return report;
  }

  std::vector<std::size_t> halls;
  for (auto const &a : profile.active()) {
    auto h = hall_indices(l, a.block);
    halls.insert(halls.end(), h.begin(), h.end());
  }

  for (std::size_t b = 0; b < ws.block_count(); ++b) {
    for (std::size_t r : ws.sigma_subgroups(b)) {
      for (std::size_t s : ws.sylowizers_in_whole(r, b)) {
        ++report.stats.cases_checked;
        ++report.stats.positive_cases;
        std::optional<std::size_t> blocker;
        for (std::size_t q : halls) {
          if (!ws.c_permutable(s, q)) {
            blocker = q;
            break;
          }
        }
        bool permutable_side = !blocker;
        bool index_side = is_sigma_i_number(l[s].index(), ws.block(b));
        if (permutable_side != index_side) {
          report.status = Status::counterexample;
          report.witness = {{"block", ws.label(b)},
                            {"R", ws.subgroup(r)},
                            {"S", ws.subgroup(s)},
                            {"c_permutable_with_all_halls", permutable_side},
                            {"index_is_sigma_i_number", index_side},
                            {"index", l[s].index()}};
          if (blocker)
            report.witness["non_permuting_hall"] = ws.subgroup(*blocker);
          return report;
        }
      }
    }
  }
  return report;
}

namespace detail
{

struct HypothesisOutcome
{
  bool holds = false;
  Json witness;
  std::uint64_t hall_sets_examined = 0;
};

/// The sylowizer hypothesis shared by both criteria, restricted to the normal
/// subgroup e (e = G for the supersolubility criterion): G is sigma-full of
/// Sylow type and some complete Hall set of nilpotent members has, for every
/// block meeting |E|, every maximal subgroup of every non-cyclic H_i n E
/// owning a sylowizer c-permutable with every member.
inline HypothesisOutcome evaluate_hall_hypothesis(Workspace &ws, std::size_t e)
{
  auto const &l = ws.lattice();
  auto const &profile = ws.profile();
  HypothesisOutcome out;

  if (auto f = sylow_type_failure(l, profile)) {
    out.witness = sylow_type_witness(ws, *f);
    return out;
  }

  auto e_blocks = profile.active_for(l[e].order());
  std::optional<Json> first_failure;

  for (auto const &hs : complete_hall_sets(l, profile)) {
    ++out.hall_sets_examined;
    std::optional<Json> failure;

    for (std::size_t k = 0; k < hs.members.size() && !failure; ++k) {
      if (!is_nilpotent(l[hs.members[k]])) {
        failure = Json{{"obligation", "nilpotent Hall members"},
                       {"hall_set", ws.hall_set(hs)},
                       {"block", profile.active()[k].label()}};
      }
    }

    for (std::size_t b : e_blocks) {
      if (failure)
        break;
      std::size_t x = l.intersection_index(hs.members[b], e);
      if (is_cyclic(l[x]))
        continue;
      for (std::size_t m : l.maximal_in(x)) {
        auto const &syl = ws.sylowizers_in_whole(m, b);
        bool ok = std::any_of(syl.begin(), syl.end(), [&](std::size_t s) {
          return std::all_of(hs.members.begin(), hs.members.end(),
                             [&](std::size_t h) { return ws.c_permutable(s, h); });
        });
        if (!ok) {
          failure = Json{{"obligation", "sylowizer c-permutable with every Hall member"},
                         {"hall_set", ws.hall_set(hs)},
                         {"block", profile.active()[b].label()},
                         {"non_cyclic_subgroup", ws.subgroup(x)},
                         {"maximal_subgroup", ws.subgroup(m)},
                         {"sylowizers", index_list(ws, syl)}};
          break;
        }
      }
    }

    if (!failure) {
      out.holds = true;
      out.witness = Json{{"hall_set", ws.hall_set(hs)}};
      return out;
    }
    if (!first_failure)
      first_failure = std::move(failure);
  }

  if (first_failure)
    out.witness = std::move(*first_failure);
  else
    out.witness = Json{{"obligation", "complete Hall sigma-set"}};
  return out;
}

inline Json chief_factors_json(Supersolubility const &s)
{
  Json out = Json::array();
  if (s.certificate) {
    for (auto f : s.certificate->factor_orders)
      out.push_back(f);
  }
  return out;
}

} // namespace detail

/// If G is sigma-full of Sylow type with a nilpotent complete Hall set whose
/// non-cyclic members' maximal subgroups all have a sylowizer c-permutable
/// with every member, then G is supersoluble.
inline VerificationReport check_supersoluble_criterion(Subject const &subject,
                                                       SigmaProfile const &profile)
{
  detail::Workspace ws(subject, profile);
  auto const &l = ws.lattice();
  auto report = detail::start_report(Statement::supersoluble_criterion, ws);

  auto outcome = detail::evaluate_hall_hypothesis(ws, l.whole_index());
  report.stats.cases_checked = std::max<std::uint64_t>(outcome.hall_sets_examined, 1);
  report.witness = std::move(outcome.witness);
  if (!outcome.holds) {
    report.status = Status::hypothesis_not_met;
    return report;
  }
  report.stats.positive_cases = 1;
  auto ss = is_supersoluble(l);
  report.witness["chief_factors"] = detail::chief_factors_json(ss);
  report.status = ss.supersoluble ? Status::verified : Status::counterexample;
  return report;
}

/// The supersoluble-class instance of the formation criterion for a normal
/// subgroup E: if G/E is supersoluble and the sylowizer hypothesis holds on
/// the Hall members intersected with E, then G is supersoluble. Throws
/// GroupError when E is not a normal subgroup of the subject.
inline VerificationReport check_formation_criterion(Subject const &subject,
                                                    SigmaProfile const &profile,
                                                    Subgroup const &e)
{
  detail::Workspace ws(subject, profile);
  auto const &l = ws.lattice();
  std::size_t ei = l.index_of(e);
  if (!l.is_normal(ei))
    throw GroupError("E must be a normal subgroup");
  auto report = detail::start_report(Statement::formation_criterion, ws);
  report.stats.cases_checked = 1;

  auto quotient = quotient_group(l[ei]);
  SubgroupLattice ql(quotient.group());
  if (!is_supersoluble(ql).supersoluble) {
    report.status = Status::hypothesis_not_met;
    report.witness = {{"obligation", "G/E supersoluble"}, {"E", ws.subgroup(ei)}};
    return report;
  }

  auto outcome = detail::evaluate_hall_hypothesis(ws, ei);
  report.stats.cases_checked = std::max<std::uint64_t>(outcome.hall_sets_examined, 1);
  report.witness = std::move(outcome.witness);
  report.witness["E"] = ws.subgroup(ei);
  if (!outcome.holds) {
    report.status = Status::hypothesis_not_met;
    return report;
  }
  report.stats.positive_cases = 1;
  auto ss = is_supersoluble(l);
  report.witness["chief_factors"] = detail::chief_factors_json(ss);
  report.status = ss.supersoluble ? Status::verified : Status::counterexample;
  return report;
}

/// The formation criterion run for every normal subgroup E of G. Any
/// counterexample wins; otherwise verified when the hypothesis held for some
/// E, and hypothesis-not-met (with the E = G witness) when it held for none.
inline VerificationReport check_formation_criterion_all(Subject const &subject,
                                                        SigmaProfile const &profile)
{
  auto const &l = subject.lattice;
  VerificationReport combined;
  Json held = Json::array();
  std::optional<VerificationReport> last;
  for (std::size_t e : l.normal_indices()) {
    auto r = check_formation_criterion(subject, profile, l[e]);
    combined.stats.cases_checked += 1;
    combined.stats.positive_cases += r.stats.positive_cases;
    if (r.status == Status::counterexample)
      return r;
    if (r.stats.positive_cases)
      held.push_back(subgroup_json(l[e]));
    last = std::move(r);
  }
  combined.statement = last->statement;
  combined.group = last->group;
  combined.group_order = last->group_order;
  combined.sigma = last->sigma;
  if (held.empty()) {
    combined.status = Status::hypothesis_not_met;
    combined.witness = std::move(last->witness);
  } else {
    combined.status = Status::verified;
    combined.witness = {{"hypothesis_held_for_E", std::move(held)}};
  }
  return combined;
}

/// All set-partitions of the primes into at most max_blocks blocks,
/// enumerated by restricted growth strings.
inline std::vector<SigmaPartition> sigma_family(std::vector<std::uint64_t> primes,
                                                std::size_t max_blocks)
{
  if (max_blocks < 1)
    throw GroupError("max_blocks must be at least 1");
  std::sort(primes.begin(), primes.end());
  std::vector<SigmaPartition> out;
  std::vector<std::size_t> rgs(primes.size(), 0);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t used) {
    if (pos == primes.size()) {
      std::vector<std::vector<std::uint64_t>> blocks(used);
      for (std::size_t i = 0; i < primes.size(); ++i)
        blocks[rgs[i]].push_back(primes[i]);
      out.emplace_back(std::move(blocks));
      return;
    }
    for (std::size_t b = 0; b <= used && b < max_blocks; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

inline VerificationReport run_statement(Statement s, Subject const &subject,
                                        SigmaProfile const &profile,
                                        CheckOptions const &options = {})
{
  switch (s) {
  case Statement::sylowizer_restriction:
    return check_sylowizer_restriction(subject, profile, options);
  case Statement::quotient_correspondence:
    return check_quotient_correspondence(subject, profile);
  case Statement::permutable_sylowizer:
    return check_permutable_sylowizer(subject, profile);
  case Statement::c_permutable_iff_index:
    return check_c_permutable_iff_index(subject, profile);
  case Statement::supersoluble_criterion:
    return check_supersoluble_criterion(subject, profile);
  case Statement::formation_criterion:
    return check_formation_criterion_all(subject, profile);
  }
  throw GroupError("unknown statement");
}

/// A catalog entry: a label for diagnostics and group-file text.
struct CatalogEntry
{
  std::string label;
  std::string text;
};

struct RunConfig
{
  std::size_t max_blocks = 3;
  std::vector<Statement> statements{all_statements.begin(), all_statements.end()};
  /// 0 means one worker per hardware thread.
  std::size_t workers = 1;
  /// Generators of E for the formation criterion, in each group's degree.
  /// Without it every normal subgroup of each group is tried.
  std::optional<std::vector<std::string>> normal_e;
  CheckOptions options;
};

struct CatalogSummary
{
  struct Counts
  {
    std::uint64_t verified = 0;
    std::uint64_t hypothesis_not_met = 0;
    std::uint64_t counterexample = 0;
    std::uint64_t cases_checked = 0;
    std::uint64_t positive_cases = 0;
  };
  std::map<std::string, Counts> by_statement;
  std::vector<std::pair<std::string, std::string>> skipped; // label, error
  std::uint64_t counterexamples = 0;

  Json to_json() const
  {
    Json j;
    Json stmts = Json::object();
    for (auto const &[id, c] : by_statement) {
      stmts[id] = {{"verified", c.verified},
                   {"hypothesis-not-met", c.hypothesis_not_met},
                   {"counterexample", c.counterexample},
                   {"cases_checked", c.cases_checked},
                   {"positive_cases", c.positive_cases}};
    }
    j["statements"] = std::move(stmts);
    Json sk = Json::array();
    for (auto const &[label, err] : skipped)
      sk.push_back({{"entry", label}, {"error", err}});
    j["skipped"] = std::move(sk);
    j["counterexamples"] = counterexamples;
    return j;
  }
};

struct CatalogResult
{
  std::vector<VerificationReport> reports;
  CatalogSummary summary;

  int exit_status() const { return summary.counterexamples ? 1 : 0; }
};

namespace detail
{

inline void parallel_for(std::size_t count, std::size_t workers,
                         std::function<void(std::size_t)> const &body)
{
  if (workers == 0)
    workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto loop = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    loop();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back(loop);
  }
  if (error)
    std::rethrow_exception(error);
}

} // namespace detail

/// Runs the selected statements on every catalog group and every sigma in
/// sigma_family(pi(|G|), max_blocks). Reports are sorted by group name, sigma
/// text and statement id, so the output does not depend on the worker count.
inline CatalogResult run_catalog(std::vector<CatalogEntry> const &catalog,
                                 RunConfig const &config)
{
  CatalogResult result;
  std::vector<std::unique_ptr<Subject>> subjects(catalog.size());
  std::vector<std::string> errors(catalog.size());

  detail::parallel_for(catalog.size(), config.workers, [&](std::size_t i) {
    try {
      auto file = parse_group_file(catalog[i].text);
      auto group = build_group(file);
      if (!group->materialized())
        throw GroupError("order " + std::to_string(group->order()) +
                         " exceeds the materialization cap");
      subjects[i] = std::make_unique<Subject>(file.name, group);
    } catch (std::exception const &ex) {
      errors[i] = ex.what();
    }
  });

  struct Task
  {
    Subject const *subject;
    SigmaPartition sigma;
    Statement statement;
    std::optional<Subgroup> e;
  };
  std::vector<Task> tasks;
  std::set<std::string> names;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (subjects[i] && !names.insert(subjects[i]->name).second) {
      errors[i] = "duplicate group name \"" + subjects[i]->name + "\"";
      subjects[i].reset();
    }
    if (!subjects[i]) {
      result.summary.skipped.emplace_back(catalog[i].label, errors[i]);
      continue;
    }
    auto const &subject = *subjects[i];
    std::optional<Subgroup> e;
    if (config.normal_e) {
      try {
        std::vector<Permutation> gens;
        for (auto const &g : *config.normal_e)
          gens.push_back(parse_permutation(g, subject.group->degree()));
        e = Subgroup::generated_by(subject.group, gens);
        if (!e->is_normal())
          throw GroupError("E is not normal in " + subject.name);
      } catch (std::exception const &ex) {
        result.summary.skipped.emplace_back(catalog[i].label, ex.what());
        continue;
      }
    }
    for (auto &sigma : sigma_family(prime_divisors(subject.group->order()), config.max_blocks)) {
      for (auto s : config.statements)
        tasks.push_back(Task{&subject, sigma, s, e});
    }
  }

  result.reports.resize(tasks.size());
  detail::parallel_for(tasks.size(), config.workers, [&](std::size_t i) {
    auto const &task = tasks[i];
    SigmaProfile profile(task.sigma, task.subject->group->order());
    if (task.statement == Statement::formation_criterion && task.e)
      result.reports[i] = check_formation_criterion(*task.subject, profile, *task.e);
    else
      result.reports[i] = run_statement(task.statement, *task.subject, profile, config.options);
  });

  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [](VerificationReport const &a, VerificationReport const &b) {
                     return std::tie(a.group, a.sigma, a.statement) <
                            std::tie(b.group, b.sigma, b.statement);
                   });

  for (auto const &r : result.reports) {
    auto &c = result.summary.by_statement[std::string(statement_id(r.statement))];
    switch (r.status) {
    case Status::verified: ++c.verified; break;
    case Status::hypothesis_not_met: ++c.hypothesis_not_met; break;
    case Status::counterexample:
      ++c.counterexample;
      ++result.summary.counterexamples;
      break;
    }
    c.cases_checked += r.stats.cases_checked;
    c.positive_cases += r.stats.positive_cases;
  }
  return result;
}

} // namespace sigmagrp

#endif // SIGMAGRP_HARNESS_HPP
