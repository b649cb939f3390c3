#ifndef SIGMAGRP_SIGMA_HPP
#define SIGMAGRP_SIGMA_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lattice.hpp"

namespace sigmagrp
{

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

/// Distinct prime divisors of n, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

/// A set of primes: either finite, or cofinite (every prime except a finite
/// list). The cofinite form represents the implicit remainder block of a
/// sigma-partition without materializing it.
class PrimeBlock
{
public:
  PrimeBlock() = default;

  static PrimeBlock of(std::vector<std::uint64_t> primes)
  {
    return PrimeBlock(std::move(primes), false);
  }

  static PrimeBlock all_except(std::vector<std::uint64_t> primes)
  {
    return PrimeBlock(std::move(primes), true);
  }

  bool contains(std::uint64_t p) const
  {
    bool listed = std::binary_search(primes_.begin(), primes_.end(), p);
    return listed != cofinite_;
  }

  bool cofinite() const { return cofinite_; }
  std::vector<std::uint64_t> const &listed() const { return primes_; }

  /// "2,3" for finite blocks, "~2,3" for the complement of {2,3}.
  std::string to_string() const
  {
    std::string out = cofinite_ ? "~" : "";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(primes_[i]);
    }
    return out;
  }

  friend bool operator==(PrimeBlock const &, PrimeBlock const &) = default;

private:
  PrimeBlock(std::vector<std::uint64_t> primes, bool cofinite)
  : primes_(std::move(primes)), cofinite_(cofinite)
  {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  }

  std::vector<std::uint64_t> primes_;
  bool cofinite_ = false;
};

/// Every prime divisor of n lies in the block (so 1 always qualifies).
inline bool is_sigma_i_number(std::uint64_t n, PrimeBlock const &block)
{
  for (auto p : prime_divisors(n)) {
    if (!block.contains(p))
      return false;
  }
  return true;
}

/// No prime divisor of n lies in the block.
inline bool is_sigma_i_prime_number(std::uint64_t n, PrimeBlock const &block)
{
  for (auto p : prime_divisors(n)) {
    if (block.contains(p))
      return false;
  }
  return true;
}

/// Largest divisor of n that is a block-number.
inline std::uint64_t sigma_part(std::uint64_t n, PrimeBlock const &block)
{
  std::uint64_t out = 1;
  for (auto p : prime_divisors(n)) {
    if (block.contains(p))
      out *= p_part(n, p);
  }
  return out;
}

/// Explicit disjoint prime blocks plus the implicit remainder block holding
/// every other prime.
class SigmaPartition
{
public:
  SigmaPartition() = default;

  explicit SigmaPartition(std::vector<std::vector<std::uint64_t>> blocks)
  : blocks_(std::move(blocks))
  {
    std::vector<std::uint64_t> seen;
    for (auto &b : blocks_) {
      if (b.empty())
        throw ParseError("empty block in sigma-partition");
      std::sort(b.begin(), b.end());
      for (auto p : b) {
        if (!is_prime(p))
          throw ParseError(std::to_string(p) + " is not prime");
        if (std::find(seen.begin(), seen.end(), p) != seen.end())
          throw ParseError("prime " + std::to_string(p) + " appears more than once");
        seen.push_back(p);
      }
    }
  }

  std::vector<std::vector<std::uint64_t>> const &explicit_blocks() const { return blocks_; }

  /// Blocks in partition order; the last entry is the remainder block.
  std::vector<PrimeBlock> blocks() const
  {
    std::vector<PrimeBlock> out;
    std::vector<std::uint64_t> listed;
    for (auto const &b : blocks_) {
      out.push_back(PrimeBlock::of(b));
      listed.insert(listed.end(), b.begin(), b.end());
    }
    out.push_back(PrimeBlock::all_except(std::move(listed)));
    return out;
  }

  std::string to_string() const
  {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i)
        out += '|';
      for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
        if (j)
          out += ',';
        out += std::to_string(blocks_[i][j]);
      }
    }
    return out;
  }

  friend bool operator==(SigmaPartition const &, SigmaPartition const &) = default;

private:
  std::vector<std::vector<std::uint64_t>> blocks_;
};

/// Parses "2|3|5,7": blocks separated by '|', primes by ','. Whitespace is
/// ignored. The empty string is the partition with only the remainder block.
inline SigmaPartition sigma_parse(std::string_view text)
{
  std::string compact;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
      continue;
    if (!(c >= '0' && c <= '9') && c != ',' && c != '|')
      throw ParseError(std::string("unexpected character '") + c + "' in sigma string");
    compact += c;
  }
  std::vector<std::vector<std::uint64_t>> blocks;
  if (compact.empty())
    return SigmaPartition(std::move(blocks));

  std::vector<std::uint64_t> current;
  std::string number;
  auto flush_number = [&] {
    if (number.empty())
      throw ParseError("empty entry in sigma string \"" + std::string(text) + "\"");
    if (number.size() > 18)
      throw ParseError("prime too large in sigma string");
    current.push_back(std::stoull(number));
    number.clear();
  };
  for (char c : compact) {
    if (c == ',') {
      flush_number();
    } else if (c == '|') {
      flush_number();
      blocks.push_back(std::move(current));
      current.clear();
    } else {
      number += c;
    }
  }
  flush_number();
  blocks.push_back(std::move(current));
  return SigmaPartition(std::move(blocks));
}

/// The blocks of a partition that meet pi(|G|), in partition order, each with
/// its prime support inside |G|.
class SigmaProfile
{
public:
  struct Active
  {
    std::size_t partition_index;
    PrimeBlock block;
    std::vector<std::uint64_t> primes;

    std::string label() const
    {
      std::string out;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i)
          out += ',';
        out += std::to_string(primes[i]);
      }
      return out;
    }
  };

  SigmaProfile(SigmaPartition partition, std::uint64_t group_order)
  : partition_(std::move(partition)), group_order_(group_order)
  {
    auto primes = prime_divisors(group_order);
    auto blocks = partition_.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Active a{i, blocks[i], {}};
      for (auto p : primes) {
        if (blocks[i].contains(p))
          a.primes.push_back(p);
      }
      if (!a.primes.empty())
        active_.push_back(std::move(a));
    }
  }

  SigmaPartition const &partition() const { return partition_; }
  std::uint64_t group_order() const { return group_order_; }
  std::vector<Active> const &active() const { return active_; }

  /// Active blocks whose primes meet pi(n), for a divisor n of |G|.
  std::vector<std::size_t> active_for(std::uint64_t n) const
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < active_.size(); ++i) {
      for (auto p : active_[i].primes) {
        if (n % p == 0) {
          out.push_back(i);
          break;
        }
      }
    }
    return out;
  }

private:
  SigmaPartition partition_;
  std::uint64_t group_order_;
  std::vector<Active> active_;
};

inline bool is_sigma_subgroup(Subgroup const &h, PrimeBlock const &block)
{
  return is_sigma_i_number(h.order(), block);
}

/// Indices of the Hall block-subgroups: order a block-number, index free of
/// block primes.
inline std::vector<std::size_t> hall_indices(SubgroupLattice const &l,
                                             PrimeBlock const &block)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (is_sigma_i_number(l[i].order(), block) &&
        is_sigma_i_prime_number(l[i].index(), block))
      out.push_back(i);
  }
  return out;
}

inline std::vector<Subgroup> hall_subgroups(SubgroupLattice const &l,
                                            PrimeBlock const &block)
{
  std::vector<Subgroup> out;
  for (std::size_t i : hall_indices(l, block))
    out.push_back(l[i]);
  return out;
}

/// One Hall subgroup per active block, as lattice indices in active order.
struct HallSet
{
  std::vector<std::size_t> members;
};

/// Cartesian product of the per-block Hall lists, in lexicographic order.
inline std::vector<HallSet> complete_hall_sets(SubgroupLattice const &l,
                                               SigmaProfile const &profile)
{
  std::vector<std::vector<std::size_t>> lists;
  for (auto const &a : profile.active()) {
    lists.push_back(hall_indices(l, a.block));
    if (lists.back().empty())
      return {};
  }
  std::vector<HallSet> out{HallSet{}};
  for (auto const &list : lists) {
    std::vector<HallSet> next;
    for (auto const &partial : out) {
      for (std::size_t h : list) {
        HallSet s = partial;
        s.members.push_back(h);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Hall block-subgroups exist for every active block.
inline bool is_sigma_full(SubgroupLattice const &l, SigmaProfile const &profile)
{
  for (auto const &a : profile.active()) {
    if (hall_indices(l, a.block).empty())
      return false;
  }
  return true;
}

/// Why a group fails to be sigma-full of Sylow type, if it does.
struct SylowTypeFailure
{
  std::size_t active_block;
  enum class Reason { no_hall, not_conjugate, not_covered } reason;
  std::size_t subgroup; // offending Hall or sigma_i-subgroup index
};

inline std::optional<SylowTypeFailure>
sylow_type_failure(SubgroupLattice const &l, SigmaProfile const &profile)
{
  using Reason = SylowTypeFailure::Reason;
  for (std::size_t b = 0; b < profile.active().size(); ++b) {
    auto const &block = profile.active()[b].block;
    auto halls = hall_indices(l, block);
    if (halls.empty())
      return SylowTypeFailure{b, Reason::no_hall, l.whole_index()};
    auto cls = l.conjugacy_class(halls.front());
    for (std::size_t h : halls) {
      if (!std::binary_search(cls.begin(), cls.end(), h))
        return SylowTypeFailure{b, Reason::not_conjugate, h};
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!is_sigma_i_number(l[i].order(), block))
        continue;
      bool covered = std::any_of(halls.begin(), halls.end(),
                                 [&](std::size_t h) { return l.contains(h, i); });
      if (!covered)
        return SylowTypeFailure{b, Reason::not_covered, i};
    }
  }
  return std::nullopt;
}

/// Hall block-subgroups exist for every active block, are conjugate, and
/// every block-subgroup lies in one of them.
inline bool is_sigma_full_of_sylow_type(SubgroupLattice const &l,
                                        SigmaProfile const &profile)
{
  return !sylow_type_failure(l, profile);
}

/// O^{sigma_i}(G): the subgroup generated by all elements whose order has no
/// prime in the block. That generating set is closed under conjugation, so
/// the normal closure only confirms normality.
inline Subgroup o_upper_sigma(SubgroupLattice const &l, PrimeBlock const &block)
{
  auto const &g = l.ambient();
  auto const &t = g->table();
  std::vector<ElementId> gens;
  for (ElementId x = 1; x < t.size(); ++x) {
    if (is_sigma_i_prime_number(t.order(x), block))
      gens.push_back(x);
  }
  return l[l.index_of(normal_closure(Subgroup::generated_by(g, std::move(gens))))];
}

inline Subgroup o_upper_sigma(GroupPtr const &g, SubgroupLattice const &l,
                              PrimeBlock const &block)
{
  if (l.ambient() != g)
    throw GroupError("lattice belongs to a different group");
  return o_upper_sigma(l, block);
}

/// The same subgroup as the intersection of all normal N with |G:N| a
/// block-number.
inline Subgroup o_upper_sigma_by_normals(SubgroupLattice const &l,
                                         PrimeBlock const &block)
{
  ElementSet members(l.ambient()->table().size());
  members.set();
  for (std::size_t i : l.normal_indices()) {
    if (is_sigma_i_number(l[i].index(), block))
      members &= l[i].members();
  }
  return l[l.find(members)];
}

} // namespace sigmagrp

#endif // SIGMAGRP_SIGMA_HPP
