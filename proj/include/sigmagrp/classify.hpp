#ifndef SIGMAGRP_CLASSIFY_HPP
#define SIGMAGRP_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "sigma.hpp"

namespace sigmagrp
{

inline bool is_cyclic(Subgroup const &h)
{
  auto const &t = h.table();
  bool found = false;
  for_each_member(h.members(), [&](ElementId x) {
    if (t.order(x) == h.order())
      found = true;
  });
  return found;
}

inline bool is_abelian(Subgroup const &h)
{
  auto const &t = h.table();
  auto const &gens = h.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (t.mul(gens[i], gens[j]) != t.mul(gens[j], gens[i]))
        return false;
    }
  }
  return true;
}

/// Each Sylow subgroup is normal, tested as: the p-elements of H number
/// exactly |H|_p for every prime p.
inline bool is_nilpotent(Subgroup const &h)
{
  auto const &t = h.table();
  for (auto p : prime_divisors(h.order())) {
    std::uint64_t count = 0;
    for_each_member(h.members(), [&](ElementId x) {
      if (p_part(t.order(x), p) == t.order(x))
        ++count;
    });
    if (count != p_part(h.order(), p))
      return false;
  }
  return true;
}

inline std::vector<Subgroup> derived_series(Subgroup const &h)
{
  std::vector<Subgroup> series{h};
  while (true) {
    auto next = derived_subgroup(series.back());
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_soluble(Subgroup const &h)
{
  return derived_series(h).back().is_trivial();
}

inline void require_lattice_of(GroupPtr const &g, SubgroupLattice const &l)
{
  if (l.ambient() != g)
    throw GroupError("lattice belongs to a different group");
}

inline bool is_soluble(GroupPtr const &g, SubgroupLattice const &l)
{
  require_lattice_of(g, l);
  return is_soluble(l[l.whole_index()]);
}

/// 1 = N_0 < N_1 < ... < N_k = G, every N_j normal in G and every factor a
/// chief factor.
struct ChiefSeriesCertificate
{
  std::vector<std::size_t> series; // lattice indices
  std::vector<std::uint64_t> factor_orders;
};

/// Builds a chief series by repeatedly stepping to a minimal normal subgroup
/// strictly above the current term (the smallest-index one).
inline ChiefSeriesCertificate chief_series(SubgroupLattice const &l)
{
  ChiefSeriesCertificate cert;
  auto normals = l.normal_indices();
  std::size_t current = l.trivial_index();
  cert.series.push_back(current);
  while (current != l.whole_index()) {
    std::optional<std::size_t> step;
    for (std::size_t n : normals) {
      if (n == current || !l.contains(n, current))
        continue;
      bool minimal = true;
      for (std::size_t m : normals) {
        if (m != n && m != current && l.contains(m, current) && l.contains(n, m)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        step = n;
        break;
      }
    }
    cert.factor_orders.push_back(l[*step].order() / l[current].order());
    current = *step;
    cert.series.push_back(current);
  }
  return cert;
}

struct Supersolubility
{
  bool supersoluble = false;
  std::optional<ChiefSeriesCertificate> certificate;
};

/// Supersoluble iff every chief factor has prime order. Chief factors do not
/// depend on the chosen chief series, so one series decides it.
inline Supersolubility is_supersoluble(SubgroupLattice const &l)
{
  auto cert = chief_series(l);
  for (auto f : cert.factor_orders) {
    if (!is_prime(f))
      return {false, std::nullopt};
  }
  return {true, std::move(cert)};
}

inline Supersolubility is_supersoluble(GroupPtr const &g, SubgroupLattice const &l)
{
  require_lattice_of(g, l);
  return is_supersoluble(l);
}

/// Huppert: a finite group is supersoluble iff each maximal subgroup has
/// prime index.
inline bool is_supersoluble_huppert(SubgroupLattice const &l)
{
  for (std::size_t m : l.maximal_in(l.whole_index())) {
    if (!is_prime(l[m].index()))
      return false;
  }
  return true;
}

/// A normal subgroup of order |G|/|G|_p exists. Throws GroupError when p is
/// not prime.
inline bool is_p_nilpotent(SubgroupLattice const &l, std::uint64_t p)
{
  if (!is_prime(p))
    throw GroupError(std::to_string(p) + " is not prime");
  auto order = l.ambient()->order();
  auto complement = order / p_part(order, p);
  for (std::size_t n : l.normal_indices()) {
    if (l[n].order() == complement)
      return true;
  }
  return false;
}

inline bool is_p_nilpotent(GroupPtr const &g, SubgroupLattice const &l, std::uint64_t p)
{
  require_lattice_of(g, l);
  return is_p_nilpotent(l, p);
}

} // namespace sigmagrp

#endif // SIGMAGRP_CLASSIFY_HPP
