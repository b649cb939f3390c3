#ifndef SIGMAGRP_LATTICE_HPP
#define SIGMAGRP_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "subgroup.hpp"

namespace sigmagrp
{

/// Every subgroup of a materialized group, ordered by (order, sorted element
/// ids), with the containment relation precomputed in both directions.
class SubgroupLattice
{
public:
  using IndexSet = boost::dynamic_bitset<std::uint64_t>;

  explicit SubgroupLattice(GroupPtr ambient)
  : ambient_(std::move(ambient))
  {
    enumerate();
    index_relations();
  }

  GroupPtr const &ambient() const { return ambient_; }
  std::size_t size() const { return subgroups_.size(); }
  Subgroup const &operator[](std::size_t i) const { return subgroups_[i]; }
  std::vector<Subgroup> const &subgroups() const { return subgroups_; }

  std::size_t trivial_index() const { return 0; }
  std::size_t whole_index() const { return subgroups_.size() - 1; }

  std::optional<std::size_t> find(Subgroup const &h) const
  {
    if (h.ambient() != ambient_)
      return std::nullopt;
    auto it = index_.find(h.members());
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  std::size_t find(ElementSet const &members) const
  {
    auto it = index_.find(members);
    if (it == index_.end())
      throw GroupError("element set is not a listed subgroup");
    return it->second;
  }

  /// Throws GroupError when h is not listed in this lattice.
  std::size_t index_of(Subgroup const &h) const
  {
    auto i = find(h);
    if (!i)
      throw GroupError("subgroup is not in the lattice");
    return *i;
  }

  /// Subgroup j is contained in subgroup i.
  bool contains(std::size_t i, std::size_t j) const { return below_[i].test(j); }

  IndexSet const &below(std::size_t i) const { return below_[i]; }
  IndexSet const &above(std::size_t i) const { return above_[i]; }

  std::vector<std::size_t> subgroups_of(std::size_t i) const { return to_list(below_[i]); }
  std::vector<std::size_t> overgroups_of(std::size_t i) const { return to_list(above_[i]); }

  /// Maximal proper subgroups of subgroup i, in lattice order.
  std::vector<std::size_t> maximal_in(std::size_t i) const
  {
    std::vector<std::size_t> out;
    for (std::size_t j : subgroups_of(i)) {
      if (j != i && (above_[j] & below_[i]).count() == 2)
        out.push_back(j);
    }
    return out;
  }

  bool is_normal(std::size_t i) const { return normal_[i]; }

  std::vector<std::size_t> normal_indices() const
  {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (normal_[i])
        out.push_back(i);
    }
    return out;
  }

  /// Index of H^g.
  std::size_t conjugate_index(std::size_t i, ElementId g) const
  {
    auto const &t = ambient_->table();
    ElementSet members(t.size());
    for_each_member(subgroups_[i].members(),
                    [&](ElementId h) { members.set(t.conj(h, g)); });
    return find(members);
  }

  /// Indices of all conjugates of subgroup i, sorted.
  std::vector<std::size_t> conjugacy_class(std::size_t i) const
  {
    std::vector<std::size_t> out;
    for (ElementId g = 0; g < ambient_->table().size(); ++g)
      out.push_back(conjugate_index(i, g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t intersection_index(std::size_t i, std::size_t j) const
  {
    return find(subgroups_[i].members() & subgroups_[j].members());
  }

private:
  static std::vector<std::size_t> to_list(IndexSet const &s)
  {
    std::vector<std::size_t> out;
    for (auto i = s.find_first(); i != IndexSet::npos; i = s.find_next(i))
      out.push_back(i);
    return out;
  }

  // Cyclic extension: start from the cyclic subgroups and join every new
  // subgroup with every cyclic subgroup until nothing new appears.
  void enumerate()
  {
    auto const &t = ambient_->table();
    std::unordered_map<ElementSet, std::vector<ElementId>, ElementSetHash> found;

    std::vector<std::pair<ElementSet, ElementId>> cyclic;
    for (ElementId x = 0; x < t.size(); ++x) {
      std::vector<ElementId> gens;
      if (x != 0)
        gens.push_back(x);
      auto set = detail::close_under(t, gens);
      if (found.emplace(set, gens).second)
        cyclic.emplace_back(std::move(set), x);
    }

    std::vector<ElementSet> frontier;
    for (auto const &[set, x] : cyclic)
      frontier.push_back(set);

    while (!frontier.empty()) {
      std::vector<ElementSet> next;
      for (auto const &a : frontier) {
        auto const &a_gens = found.at(a);
        for (auto const &[c, x] : cyclic) {
          if (c.is_subset_of(a))
            continue;
          auto gens = a_gens;
          gens.push_back(x);
          auto joined = detail::close_under(t, gens);
          if (found.emplace(joined, gens).second)
            next.push_back(std::move(joined));
        }
      }
      frontier = std::move(next);
    }

    std::vector<ElementSet> sets;
    sets.reserve(found.size());
    for (auto const &entry : found)
      sets.push_back(entry.first);
    auto key = [](ElementSet const &s) {
      std::vector<std::size_t> ids;
      for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
        ids.push_back(i);
      return ids;
    };
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys;
    for (auto const &s : sets)
      keys.emplace_back(s.count(), key(s));
    std::vector<std::size_t> order(sets.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

    for (std::size_t i : order) {
      index_.emplace(sets[i], subgroups_.size());
      subgroups_.push_back(Subgroup::from_members(ambient_, sets[i]));
    }
  }

  void index_relations()
  {
    std::size_t n = subgroups_.size();
    below_.assign(n, IndexSet(n));
    above_.assign(n, IndexSet(n));
    normal_.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (subgroups_[i].order() % subgroups_[j].order() == 0 &&
            subgroups_[j].members().is_subset_of(subgroups_[i].members())) {
          below_[i].set(j);
          above_[j].set(i);
        }
      }
      normal_[i] = subgroups_[i].is_normal();
    }
  }

  GroupPtr ambient_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<IndexSet> below_;
  std::vector<IndexSet> above_;
  std::vector<bool> normal_;
};

inline SubgroupLattice all_subgroups(GroupPtr g)
{
  return SubgroupLattice(std::move(g));
}

inline std::vector<Subgroup> maximal_subgroups_of(SubgroupLattice const &l,
                                                  Subgroup const &h)
{
  std::vector<Subgroup> out;
  for (std::size_t j : l.maximal_in(l.index_of(h)))
    out.push_back(l[j]);
  return out;
}

inline std::vector<Subgroup> normal_subgroups(SubgroupLattice const &l)
{
  std::vector<Subgroup> out;
  for (std::size_t i : l.normal_indices())
    out.push_back(l[i]);
  return out;
}

inline std::vector<std::size_t> minimal_normal_indices(SubgroupLattice const &l)
{
  if (l.ambient()->order() == 1)
    throw GroupError("the trivial group has no minimal normal subgroups");
  std::vector<std::size_t> out;
  auto normals = l.normal_indices();
  for (std::size_t i : normals) {
    if (i == l.trivial_index())
      continue;
    bool minimal = true;
    for (std::size_t j : normals) {
      if (j != i && j != l.trivial_index() && l.contains(i, j)) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      out.push_back(i);
  }
  return out;
}

inline std::vector<Subgroup> minimal_normal_subgroups(SubgroupLattice const &l)
{
  std::vector<Subgroup> out;
  for (std::size_t i : minimal_normal_indices(l))
    out.push_back(l[i]);
  return out;
}

/// Intersection of all maximal subgroups; the trivial group's is itself.
inline Subgroup frattini(SubgroupLattice const &l)
{
  ElementSet members(l.ambient()->table().size());
  members.set();
  for (std::size_t j : l.maximal_in(l.whole_index()))
    members &= l[j].members();
  return l[l.find(members)];
}

inline Subgroup normalizer(SubgroupLattice const &l, Subgroup const &h)
{
  l.index_of(h);
  return normalizer(h);
}

} // namespace sigmagrp

#endif // SIGMAGRP_LATTICE_HPP
