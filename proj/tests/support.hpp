#ifndef SIGMAGRP_TESTS_SUPPORT_HPP
#define SIGMAGRP_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "oracles.hpp"
#include "sigmagrp/sigmagrp.hpp"

namespace testing_support
{

using namespace sigmagrp;

inline GroupPtr make_group(std::vector<std::string> const &gens, std::size_t degree)
{
  std::vector<Permutation> perms;
  for (auto const &g : gens)
    perms.push_back(parse_permutation(g, degree));
  return Group::from_generators(std::move(perms), degree);
}

inline GroupFile family_file(std::string const &name)
{
  return builtin_catalog(name).at(0);
}

inline GroupPtr family(std::string const &name)
{
  return build_group(family_file(name));
}

inline Subgroup sub(GroupPtr const &g, std::vector<std::string> const &gens)
{
  std::vector<Permutation> perms;
  for (auto const &x : gens)
    perms.push_back(parse_permutation(x, g->degree()));
  return Subgroup::generated_by(g, perms);
}

inline oracle::Perm raw(Permutation const &p)
{
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline oracle::Elements raw(Subgroup const &h)
{
  oracle::Elements out;
  for (ElementId x : h.elements())
    out.insert(raw(h.table().at(x)));
  return out;
}

inline oracle::Elements oracle_closure(GroupFile const &f)
{
  std::vector<oracle::Perm> gens;
  for (auto const &g : f.gens)
    gens.push_back(oracle::parse(g, static_cast<int>(f.degree)));
  return oracle::closure(gens, static_cast<int>(f.degree));
}

inline std::set<std::uint64_t> block_set(std::vector<std::uint64_t> primes)
{
  return {primes.begin(), primes.end()};
}

inline std::vector<std::uint64_t> orders_of(std::vector<Subgroup> const &subs)
{
  std::vector<std::uint64_t> out;
  for (auto const &s : subs)
    out.push_back(s.order());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<GroupFile> default_catalog()
{
  return builtin_catalog(default_catalog_families);
}

} // namespace testing_support

#endif // SIGMAGRP_TESTS_SUPPORT_HPP
