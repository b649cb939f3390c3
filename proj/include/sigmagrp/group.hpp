#ifndef SIGMAGRP_GROUP_HPP
#define SIGMAGRP_GROUP_HPP

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permutation.hpp"

namespace sigmagrp
{

using ElementId = std::uint32_t;

inline constexpr std::uint64_t default_order_cap = 2000;

/// Order cap for element materialization; SIGMAGRP_ORDER_CAP overrides the
/// default when set to a positive integer.
inline std::uint64_t order_cap_from_env()
{
  if (char const *env = std::getenv("SIGMAGRP_ORDER_CAP")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return default_order_cap;
}

/// Base and strong generating set, built by deterministic Schreier-Sims.
/// Base points are chosen as the smallest point moved by the generator that
/// forced a new level.
class StabilizerChain
{
public:
  struct Level
  {
    Point base_point;
    std::vector<Point> orbit;
    // transversal[p] maps base_point to p; empty optional off the orbit
    std::vector<std::optional<Permutation>> transversal;
  };

  StabilizerChain() = default;

  StabilizerChain(std::size_t degree, std::span<Permutation const> generators)
  : degree_(degree)
  {
    for (auto const &g : generators) {
      if (g.degree() != degree)
        throw GroupError("generator degree mismatch");
      if (!g.is_identity() && !contains(g))
        add_strong_generator(g);
    }
  }

  std::size_t degree() const { return degree_; }
  std::vector<Level> const &levels() const { return levels_; }

  std::vector<Point> base() const
  {
    std::vector<Point> result;
    for (auto const &lvl : levels_)
      result.push_back(lvl.base_point);
    return result;
  }

  /// Product of fundamental orbit lengths; throws on 64-bit overflow.
  std::uint64_t order() const
  {
    std::uint64_t result = 1;
    for (auto const &lvl : levels_) {
      std::uint64_t len = lvl.orbit.size();
      if (result > std::numeric_limits<std::uint64_t>::max() / len)
        throw GroupError("group order overflows 64 bits");
      result *= len;
    }
    return result;
  }

  /// Strips p through the chain; returns the residue and the level it stopped
  /// at (levels().size() when every level was passed).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from = 0) const
  {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      auto const &u = levels_[i].transversal[p(levels_[i].base_point)];
      if (!u)
        return {std::move(p), i};
      p = p * u->inverse();
    }
    return {std::move(p), levels_.size()};
  }

  bool contains(Permutation const &p) const
  {
    if (p.degree() != degree_)
      throw GroupError("permutation degree mismatch");
    return sift(p).first.is_identity();
  }

  /// All elements u_k * ... * u_0, one per choice of transversal entries.
  std::vector<Permutation> enumerate() const
  {
    std::vector<Permutation> result{Permutation(degree_)};
    for (auto const &lvl : levels_) {
      std::vector<Permutation> next;
      next.reserve(result.size() * lvl.orbit.size());
      for (auto const &x : result) {
        for (Point p : lvl.orbit)
          next.push_back(*lvl.transversal[p] * x);
      }
      result = std::move(next);
    }
    return result;
  }

  std::vector<Permutation> const &strong_generators() const { return strong_; }

private:
  // Number of leading base points fixed by g.
  std::size_t depth(Permutation const &g) const
  {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      if (g(levels_[i].base_point) != levels_[i].base_point)
        return i;
    }
    return levels_.size();
  }

  void rebuild_orbit(std::size_t i)
  {
    auto &lvl = levels_[i];
    lvl.transversal.assign(degree_, std::nullopt);
    lvl.orbit = {lvl.base_point};
    lvl.transversal[lvl.base_point] = Permutation(degree_);
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      Point p = lvl.orbit[k];
      for (std::size_t s = 0; s < strong_.size(); ++s) {
        if (depth_of_[s] < i)
          continue;
        Point q = strong_[s](p);
        if (!lvl.transversal[q]) {
          lvl.transversal[q] = *lvl.transversal[p] * strong_[s];
          lvl.orbit.push_back(q);
        }
      }
    }
  }

  void add_strong_generator(Permutation g)
  {
    std::size_t d = depth(g);
    if (d == levels_.size())
      levels_.push_back(Level{g.first_moved_point(), {}, {}});
    strong_.push_back(std::move(g));
    depth_of_.push_back(d);
    for (std::size_t i = 0; i <= d; ++i)
      rebuild_orbit(i);

    // Schreier generators are checked from the deepest level up; any
    // non-trivial residue is added and the check restarts.
    while (add_failing_schreier_residue()) {
    }
  }

  bool add_failing_schreier_residue()
  {
    for (std::size_t i = levels_.size(); i-- > 0;) {
      auto const &lvl = levels_[i];
      for (Point p : lvl.orbit) {
        for (std::size_t s = 0; s < strong_.size(); ++s) {
          if (depth_of_[s] < i)
            continue;
          Point q = strong_[s](p);
          Permutation schreier =
            *lvl.transversal[p] * strong_[s] * lvl.transversal[q]->inverse();
          auto residue = sift(std::move(schreier), i + 1).first;
          if (residue.is_identity())
            continue;
          std::size_t rd = depth(residue);
          if (rd == levels_.size())
            levels_.push_back(Level{residue.first_moved_point(), {}, {}});
          strong_.push_back(std::move(residue));
          depth_of_.push_back(rd);
          for (std::size_t j = 0; j <= rd; ++j)
            rebuild_orbit(j);
          return true;
        }
      }
    }
    return false;
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
  std::vector<std::size_t> depth_of_;
};

/// Multiplication and inverse tables over the lexicographically sorted
/// element list. Element 0 is the identity.
class ElementTable
{
public:
  explicit ElementTable(std::vector<Permutation> elements)
  : elements_(std::move(elements))
  {
    std::sort(elements_.begin(), elements_.end());
    n_ = elements_.size();
    index_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i)
      index_.emplace(elements_[i], static_cast<ElementId>(i));

    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b)
        mul_[a * n_ + b] = index_.at(elements_[a] * elements_[b]);
    }
    inv_.resize(n_);
    order_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (mul_[a * n_ + b] == 0) {
          inv_[a] = static_cast<ElementId>(b);
          break;
        }
      }
      std::uint32_t k = 1;
      for (ElementId x = static_cast<ElementId>(a); x != 0; x = mul_[x * n_ + a])
        ++k;
      order_[a] = k;
    }
  }

  std::size_t size() const { return n_; }
  Permutation const &at(ElementId id) const { return elements_[id]; }
  std::vector<Permutation> const &elements() const { return elements_; }

  std::optional<ElementId> find(Permutation const &p) const
  {
    auto it = index_.find(p);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  ElementId mul(ElementId a, ElementId b) const { return mul_[a * n_ + b]; }
  ElementId inv(ElementId a) const { return inv_[a]; }
  /// g^-1 * a * g
  ElementId conj(ElementId a, ElementId g) const { return mul(mul(inv_[g], a), g); }
  std::uint32_t order(ElementId a) const { return order_[a]; }

private:
  std::size_t n_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::vector<std::uint32_t> order_;
};

class Group;
using GroupPtr = std::shared_ptr<Group const>;

/// A permutation group of fixed degree. Immutable once built; share it
/// through GroupPtr. Elements are materialized when the order is at most the
/// configured cap, which every subgroup-level algorithm requires.
class Group
{
public:
  static GroupPtr from_generators(std::vector<Permutation> generators,
                                  std::size_t degree,
                                  std::uint64_t order_cap = order_cap_from_env())
  {
    if (degree == 0)
      throw GroupError("degree must be positive");
    if (degree > max_degree)
      throw GroupError("degree too large");
    for (auto const &g : generators) {
      if (g.degree() != degree)
        throw GroupError("generator degree mismatch");
    }
    return GroupPtr(new Group(std::move(generators), degree, order_cap));
  }

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  StabilizerChain const &chain() const { return chain_; }
  std::uint64_t order_cap() const { return order_cap_; }

  bool contains(Permutation const &p) const { return chain_.contains(p); }

  bool materialized() const { return table_.has_value(); }

  ElementTable const &table() const
  {
    if (!table_)
      throw GroupError("group of order " + std::to_string(order_) +
                       " exceeds the materialization cap " +
                       std::to_string(order_cap_));
    return *table_;
  }

  /// Element ids of the generators (materialized groups only).
  std::vector<ElementId> generator_ids() const
  {
    std::vector<ElementId> ids;
    for (auto const &g : generators_)
      ids.push_back(*table().find(g));
    return ids;
  }

  ElementId id_of(Permutation const &p) const
  {
    auto id = table().find(p);
    if (!id)
      throw GroupError("permutation " + p.to_cycles() + " is not in the group");
    return *id;
  }

private:
  Group(std::vector<Permutation> generators, std::size_t degree,
        std::uint64_t order_cap)
  : degree_(degree),
    generators_(std::move(generators)),
    chain_(degree, generators_),
    order_(chain_.order()),
    order_cap_(order_cap)
  {
    if (order_ <= order_cap_)
      table_.emplace(chain_.enumerate());
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  StabilizerChain chain_;
  std::uint64_t order_;
  std::uint64_t order_cap_;
  std::optional<ElementTable> table_;
};

} // namespace sigmagrp

#endif // SIGMAGRP_GROUP_HPP
