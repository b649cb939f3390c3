#ifndef SIGMAGRP_SYLOWIZER_HPP
#define SIGMAGRP_SYLOWIZER_HPP

#include <optional>
#include <vector>

#include "sigma.hpp"

namespace sigmagrp
{

/// R is a Hall block-subgroup of S: |R| is a block-number and |S:R| has no
/// prime in the block. Throws GroupError unless R <= S.
inline bool is_hall_in(Subgroup const &s, Subgroup const &r, PrimeBlock const &block)
{
  if (!r.is_subgroup_of(s))
    throw GroupError("subgroup is not contained in the candidate overgroup");
  return is_sigma_i_number(r.order(), block) &&
         is_sigma_i_prime_number(s.order() / r.order(), block);
}

/// Sylowizers of subgroup r inside subgroup k (both lattice indices): the
/// subgroups S with r <= S <= k having r as a Hall block-subgroup, maximal
/// among such. Assumes r is a block-subgroup contained in k.
inline std::vector<std::size_t> sylowizer_indices(SubgroupLattice const &l,
                                                  std::size_t k, std::size_t r,
                                                  PrimeBlock const &block)
{
  auto candidates = l.below(k) & l.above(r);
  auto const r_order = l[r].order();
  for (auto i = candidates.find_first(); i != candidates.npos; i = candidates.find_next(i)) {
    if (!is_sigma_i_prime_number(l[i].order() / r_order, block))
      candidates.reset(i);
  }
  std::vector<std::size_t> out;
  for (auto i = candidates.find_first(); i != candidates.npos; i = candidates.find_next(i)) {
    if ((l.above(i) & candidates).count() == 1)
      out.push_back(i);
  }
  return out;
}

/// A block-subgroup R of the lattice's ambient group and the block.
struct SylowizerQuery
{
  SubgroupLattice const &lattice;
  Subgroup r;
  PrimeBlock block;
};

/// All sigma_i-sylowizers of R in G. Throws GroupError when R is not a
/// block-subgroup or not in the lattice.
inline std::vector<Subgroup> sylowizers(SylowizerQuery const &q)
{
  if (!is_sigma_subgroup(q.r, q.block))
    throw GroupError("subgroup of order " + std::to_string(q.r.order()) +
                     " is not a " + q.block.to_string() + "-subgroup");
  auto const &l = q.lattice;
  std::vector<Subgroup> out;
  for (std::size_t i : sylowizer_indices(l, l.whole_index(), l.index_of(q.r), q.block))
    out.push_back(l[i]);
  return out;
}

struct CPermutability
{
  bool permutable = false;
  std::optional<ElementId> witness; // x with H T^x = T^x H
};

/// Searches x over right coset representatives of N_G(T), smallest element
/// id first, for a conjugate T^x permuting with H.
inline CPermutability is_c_permutable(Subgroup const &h, Subgroup const &t)
{
  h.require_same_ambient(t);
  auto const &tab = h.table();
  auto norm = normalizer(t).elements();
  ElementSet covered(tab.size());
  for (ElementId x = 0; x < tab.size(); ++x) {
    if (covered.test(x))
      continue;
    for (ElementId n : norm)
      covered.set(tab.mul(n, x));
    if (product_is_permuting(h, t.conjugate(x)))
      return {true, x};
  }
  return {false, std::nullopt};
}

inline CPermutability is_c_permutable(GroupPtr const &g, Subgroup const &h,
                                      Subgroup const &t)
{
  if (h.ambient() != g || t.ambient() != g)
    throw GroupError("subgroups are not inside the given group");
  return is_c_permutable(h, t);
}

struct SigmaPermutability
{
  bool permutable = false;
  std::optional<HallSet> witness; // complete Hall set every conjugate of which permutes with A
};

namespace detail
{

/// A permutes with every conjugate of lattice subgroup h.
inline bool permutes_with_class(SubgroupLattice const &l, Subgroup const &a,
                                std::size_t h)
{
  for (std::size_t c : l.conjugacy_class(h)) {
    if (!product_is_permuting(a, l[c]))
      return false;
  }
  return true;
}

} // namespace detail

/// A is sigma-permutable when some complete Hall sigma-set H has
/// A H_i^x = H_i^x A for every member and every x. The search covers every
/// complete Hall set. Throws GroupError when there is none.
inline SigmaPermutability is_sigma_permutable(SubgroupLattice const &l,
                                              Subgroup const &a,
                                              SigmaProfile const &profile)
{
  if (!is_sigma_full(l, profile))
    throw GroupError("group has no complete Hall sigma-set");
  HallSet witness;
  for (auto const &block : profile.active()) {
    std::optional<std::size_t> found;
    for (std::size_t h : hall_indices(l, block.block)) {
      if (detail::permutes_with_class(l, a, h)) {
        found = h;
        break;
      }
    }
    if (!found)
      return {false, std::nullopt};
    witness.members.push_back(*found);
  }
  return {true, witness};
}

} // namespace sigmagrp

#endif // SIGMAGRP_SYLOWIZER_HPP
