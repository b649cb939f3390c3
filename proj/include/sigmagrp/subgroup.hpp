#ifndef SIGMAGRP_SUBGROUP_HPP
#define SIGMAGRP_SUBGROUP_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "group.hpp"

namespace sigmagrp
{

/// Membership bitmap over the ambient group's element ids.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    std::vector<std::uint64_t> blocks(s.num_blocks());
    boost::to_block_range(s, blocks.begin());
    for (auto b : blocks)
      h = (h ^ b) * 1099511628211ull;
    return h;
  }
};

/// Visits the set bits of s in increasing order.
template<typename F>
void for_each_member(ElementSet const &s, F &&f)
{
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    f(static_cast<ElementId>(i));
}

namespace detail
{

inline ElementSet close_under(ElementTable const &table,
                              std::span<ElementId const> generators)
{
  ElementSet set(table.size());
  std::vector<ElementId> queue{0};
  set.set(0);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (ElementId g : generators) {
      ElementId y = table.mul(queue[k], g);
      if (!set.test(y)) {
        set.set(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

} // namespace detail

/// A subgroup of a materialized ambient group, held as its element set plus
/// the generators it was built from. Two subgroups of the same ambient group
/// are equal iff their element sets are equal.
class Subgroup
{
public:
  Subgroup(GroupPtr ambient, ElementSet members, std::vector<ElementId> generators)
  : ambient_(std::move(ambient)),
    members_(std::move(members)),
    generators_(std::move(generators)),
    order_(members_.count())
  {}

  static Subgroup generated_by(GroupPtr ambient, std::vector<ElementId> generators)
  {
    auto const &table = ambient->table();
    std::erase(generators, ElementId{0});
    ElementSet members = detail::close_under(table, generators);
    return Subgroup(std::move(ambient), std::move(members), std::move(generators));
  }

  /// Throws GroupError when a generator is not an element of the ambient group.
  static Subgroup generated_by(GroupPtr ambient,
                               std::vector<Permutation> const &generators)
  {
    std::vector<ElementId> ids;
    for (auto const &g : generators) {
      if (g.degree() != ambient->degree())
        throw GroupError("permutation degree mismatch");
      ids.push_back(ambient->id_of(g));
    }
    return generated_by(std::move(ambient), std::move(ids));
  }

  /// Builds a subgroup from a product-closed element set and picks a
  /// generating set greedily in element order.
  static Subgroup from_members(GroupPtr ambient, ElementSet members)
  {
    auto const &table = ambient->table();
    std::vector<ElementId> gens;
    ElementSet closure(table.size());
    closure.set(0);
    for_each_member(members, [&](ElementId x) {
      if (closure.test(x))
        return;
      gens.push_back(x);
      closure = detail::close_under(table, gens);
    });
    if (closure != members)
      throw GroupError("element set is not closed under products");
    return Subgroup(std::move(ambient), std::move(members), std::move(gens));
  }

  static Subgroup trivial(GroupPtr ambient)
  {
    ElementSet members(ambient->table().size());
    members.set(0);
    return Subgroup(std::move(ambient), std::move(members), {});
  }

  static Subgroup whole(GroupPtr ambient)
  {
    auto gens = ambient->generator_ids();
    std::erase(gens, ElementId{0});
    ElementSet members(ambient->table().size());
    members.set();
    return Subgroup(std::move(ambient), std::move(members), std::move(gens));
  }

  GroupPtr const &ambient() const { return ambient_; }
  ElementTable const &table() const { return ambient_->table(); }

  std::uint64_t order() const { return order_; }
  std::uint64_t index() const { return ambient_->order() / order_; }

  ElementSet const &members() const { return members_; }

  std::vector<ElementId> elements() const
  {
    std::vector<ElementId> out;
    out.reserve(order_);
    for_each_member(members_, [&](ElementId x) { out.push_back(x); });
    return out;
  }

  std::vector<ElementId> const &generator_ids() const { return generators_; }

  std::vector<Permutation> generators() const
  {
    std::vector<Permutation> out;
    for (ElementId g : generators_)
      out.push_back(table().at(g));
    return out;
  }

  std::vector<std::string> generator_cycles() const
  {
    std::vector<std::string> out;
    for (ElementId g : generators_)
      out.push_back(table().at(g).to_cycles());
    return out;
  }

  bool contains(ElementId x) const { return members_.test(x); }

  bool contains(Permutation const &p) const
  {
    if (p.degree() != ambient_->degree())
      throw GroupError("permutation degree mismatch");
    auto id = table().find(p);
    return id && members_.test(*id);
  }

  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == ambient_->order(); }

  bool is_subgroup_of(Subgroup const &other) const
  {
    require_same_ambient(other);
    return members_.is_subset_of(other.members_);
  }

  /// H^g = {g^-1 h g : h in H}.
  Subgroup conjugate(ElementId g) const
  {
    auto const &t = table();
    ElementSet members(t.size());
    for_each_member(members_, [&](ElementId h) { members.set(t.conj(h, g)); });
    std::vector<ElementId> gens;
    for (ElementId h : generators_)
      gens.push_back(t.conj(h, g));
    return Subgroup(ambient_, std::move(members), std::move(gens));
  }

  /// True iff g normalizes this subgroup.
  bool normalized_by(ElementId g) const
  {
    auto const &t = table();
    for (ElementId h : generators_) {
      if (!members_.test(t.conj(h, g)))
        return false;
    }
    return true;
  }

  bool is_normal() const
  {
    for (ElementId g : ambient_->generator_ids()) {
      if (!normalized_by(g))
        return false;
    }
    return true;
  }

  void require_same_ambient(Subgroup const &other) const
  {
    if (ambient_ != other.ambient_)
      throw GroupError("subgroups belong to different ambient groups");
  }

  friend bool operator==(Subgroup const &a, Subgroup const &b)
  {
    return a.ambient_ == b.ambient_ && a.members_ == b.members_;
  }

private:
  GroupPtr ambient_;
  ElementSet members_;
  std::vector<ElementId> generators_;
  std::uint64_t order_;
};

inline Subgroup intersection(Subgroup const &a, Subgroup const &b)
{
  a.require_same_ambient(b);
  return Subgroup::from_members(a.ambient(), a.members() & b.members());
}

/// <A, B>
inline Subgroup join(Subgroup const &a, Subgroup const &b)
{
  a.require_same_ambient(b);
  auto gens = a.generator_ids();
  for (ElementId g : b.generator_ids()) {
    if (!a.contains(g))
      gens.push_back(g);
  }
  return Subgroup::generated_by(a.ambient(), std::move(gens));
}

/// The element set {ab : a in A, b in B}.
inline ElementSet product_set(Subgroup const &a, Subgroup const &b)
{
  a.require_same_ambient(b);
  auto const &t = a.table();
  ElementSet out(t.size());
  auto bs = b.elements();
  for_each_member(a.members(), [&](ElementId x) {
    for (ElementId y : bs)
      out.set(t.mul(x, y));
  });
  return out;
}

/// True iff AB = BA as sets, i.e. AB is a subgroup.
inline bool product_is_permuting(Subgroup const &a, Subgroup const &b)
{
  a.require_same_ambient(b);
  if (a.is_subgroup_of(b) || b.is_subgroup_of(a))
    return true;
  return product_set(a, b) == product_set(b, a);
}

inline Subgroup normalizer(Subgroup const &h)
{
  auto const &t = h.table();
  ElementSet members(t.size());
  for (ElementId g = 0; g < t.size(); ++g) {
    if (h.normalized_by(g))
      members.set(g);
  }
  return Subgroup::from_members(h.ambient(), std::move(members));
}

/// Smallest subgroup of `within` containing h and normalized by every
/// generator of `within`.
inline Subgroup normal_closure_in(Subgroup const &h, Subgroup const &within)
{
  h.require_same_ambient(within);
  if (!h.is_subgroup_of(within))
    throw GroupError("subgroup is not contained in the enclosing group");
  auto const &t = h.table();
  std::vector<ElementId> gens = h.generator_ids();
  ElementSet members = h.members();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (ElementId g : within.generator_ids()) {
      ElementId c = t.conj(gens[k], g);
      if (!members.test(c)) {
        gens.push_back(c);
        members = detail::close_under(t, gens);
      }
    }
  }
  return Subgroup(h.ambient(), std::move(members), std::move(gens));
}

inline Subgroup normal_closure(Subgroup const &h)
{
  return normal_closure_in(h, Subgroup::whole(h.ambient()));
}

inline Subgroup normal_closure(GroupPtr const &g, Subgroup const &h)
{
  if (h.ambient() != g)
    throw GroupError("subgroup is not inside the given group");
  return normal_closure(h);
}

/// [a, b] = a^-1 b^-1 a b
inline ElementId commutator(ElementTable const &t, ElementId a, ElementId b)
{
  return t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b));
}

/// H' as the normal closure in H of the commutators of H's generators.
inline Subgroup derived_subgroup(Subgroup const &h)
{
  auto const &t = h.table();
  auto const &gens = h.generator_ids();
  std::vector<ElementId> comms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      ElementId c = commutator(t, gens[i], gens[j]);
      if (c != 0)
        comms.push_back(c);
    }
  }
  return normal_closure_in(Subgroup::generated_by(h.ambient(), std::move(comms)), h);
}

/// G/N realized as the permutation action of G on the right cosets of N,
/// together with the induced epimorphism on element ids.
class Quotient
{
public:
  Quotient(Subgroup kernel, GroupPtr group, std::vector<ElementId> image)
  : kernel_(std::move(kernel)), group_(std::move(group)), image_(std::move(image))
  {}

  Subgroup const &kernel() const { return kernel_; }
  GroupPtr const &group() const { return group_; }

  ElementId image(ElementId g) const { return image_[g]; }
  std::vector<ElementId> const &image_map() const { return image_; }

  /// SN/N as a subgroup of the quotient.
  Subgroup image_of(Subgroup const &s) const
  {
    if (s.ambient() != kernel_.ambient())
      throw GroupError("subgroup is not in the quotient's source group");
    std::vector<ElementId> gens;
    for (ElementId g : s.generator_ids())
      gens.push_back(image_[g]);
    return Subgroup::generated_by(group_, std::move(gens));
  }

  /// Full preimage of a subgroup of the quotient; it contains the kernel.
  Subgroup preimage_of(Subgroup const &s) const
  {
    if (s.ambient() != group_)
      throw GroupError("subgroup is not in the quotient group");
    ElementSet members(image_.size());
    for (std::size_t g = 0; g < image_.size(); ++g) {
      if (s.contains(image_[g]))
        members.set(g);
    }
    return Subgroup::from_members(kernel_.ambient(), std::move(members));
  }

private:
  Subgroup kernel_;
  GroupPtr group_;
  std::vector<ElementId> image_;
};

inline Quotient quotient_group(Subgroup const &n)
{
  if (!n.is_normal())
    throw GroupError("quotient requires a normal subgroup");
  auto const &ambient = n.ambient();
  auto const &t = n.table();
  std::size_t size = t.size();

  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> coset_of(size, unset);
  std::vector<ElementId> reps;
  auto kernel = n.elements();
  for (ElementId g = 0; g < size; ++g) {
    if (coset_of[g] != unset)
      continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(g);
    for (ElementId k : kernel)
      coset_of[t.mul(k, g)] = c;
  }

  std::size_t degree = reps.size();
  auto action = [&](ElementId g) {
    std::vector<Point> images(degree);
    for (std::size_t c = 0; c < degree; ++c)
      images[c] = coset_of[t.mul(reps[c], g)];
    return Permutation::from_images(std::move(images));
  };

  std::vector<Permutation> gens;
  for (ElementId g : ambient->generator_ids())
    gens.push_back(action(g));
  auto group = Group::from_generators(std::move(gens), degree, ambient->order_cap());

  std::vector<ElementId> image(size);
  for (ElementId g = 0; g < size; ++g)
    image[g] = group->id_of(action(g));

  return Quotient(n, std::move(group), std::move(image));
}

inline Quotient quotient_group(GroupPtr const &g, Subgroup const &n)
{
  if (n.ambient() != g)
    throw GroupError("subgroup is not inside the given group");
  return quotient_group(n);
}

} // namespace sigmagrp

#endif // SIGMAGRP_SUBGROUP_HPP
