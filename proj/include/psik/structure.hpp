#pragma once

// Structural subroutines on Cayley tables: generated subgroups,
// commutators, the derived-series solvability oracle, center, the
// cyclic-normal-Sylow search and quotient groups. Set-valued results are
// always sorted by element index.

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "psik/group.hpp"
#include "psik/numbers.hpp"

namespace psik {

/// Sorted set of element indices forming a subgroup of `parent`.
struct SubgroupSet {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> members;  // strictly ascending

  int order() const noexcept { return static_cast<int>(members.size()); }
  bool contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
};

namespace detail {

inline SubgroupSet make_subgroup(const FiniteGroup& G, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  SubgroupSet s{&G, std::move(members)};
  assert(s.contains(G.identity()));
  assert(G.order() % s.order() == 0);  // Lagrange
  return s;
}

}  // namespace detail

inline SubgroupSet whole_group(const FiniteGroup& G) {
  std::vector<Elem> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return SubgroupSet{&G, std::move(all)};
}

inline SubgroupSet trivial_subgroup(const FiniteGroup& G) {
  return SubgroupSet{&G, {G.identity()}};
}

/// Smallest subgroup containing S: BFS from the identity under right
/// multiplication by the generators (a finite sub-semigroup is a group).
inline SubgroupSet subgroup_generated(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> closure{G.identity()};
  seen[G.identity()] = 1;
  for (std::size_t head = 0; head < closure.size(); ++head)
    for (Elem g : gens) {
      Elem next = G.mul(closure[head], g);
      if (!seen[next]) {
        seen[next] = 1;
        closure.push_back(next);
      }
    }
  return detail::make_subgroup(G, std::move(closure));
}

/// Subgroup generated by all commutators a^-1 b^-1 a b with a, b in H.
inline SubgroupSet commutator_subgroup(const FiniteGroup& G, const SubgroupSet& H) {
  std::vector<char> mark(G.order(), 0);
  std::vector<Elem> comms;
  for (Elem a : H.members)
    for (Elem b : H.members) {
      Elem c = G.mul(G.mul(G.inverse(a), G.inverse(b)), G.mul(a, b));
      if (!mark[c]) {
        mark[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_generated(G, comms);
}

/// G >= G' >= G'' >= ... until stabilization; last term included once.
inline std::vector<SubgroupSet> derived_series(const FiniteGroup& G) {
  std::vector<SubgroupSet> series{whole_group(G)};
  for (;;) {
    SubgroupSet next = commutator_subgroup(G, series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

/// Ground-truth oracle: solvable iff the derived series reaches {e}.
inline bool is_solvable(const FiniteGroup& G) {
  return derived_series(G).back().order() == 1;
}

inline SubgroupSet center(const FiniteGroup& G) {
  std::vector<Elem> z;
  for (Elem x = 0; x < G.order(); ++x) {
    bool central = true;
    for (Elem a = 0; a < G.order() && central; ++a) central = G.mul(x, a) == G.mul(a, x);
    if (central) z.push_back(x);
  }
  return detail::make_subgroup(G, std::move(z));
}

inline bool is_normal(const FiniteGroup& G, const SubgroupSet& N) {
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem x : N.members)
      if (!N.contains(G.conj(x, g))) return false;
  return true;
}

/// The cyclic normal Sylow p-subgroup when one exists. A witness element
/// whose order is the full p-part of |G| generates a cyclic Sylow
/// p-subgroup; if that subgroup is normal it is the unique Sylow
/// p-subgroup, so any witness gives the same answer.
inline std::optional<SubgroupSet> cyclic_normal_sylow(const FiniteGroup& G, long long p) {
  if (!is_prime(p)) throw Error("cyclic_normal_sylow: " + std::to_string(p) + " is not prime");
  if (G.order() % p != 0)
    throw Error("cyclic_normal_sylow: " + std::to_string(p) + " does not divide the group order");
  const long long full = p_part(G.order(), p);
  for (Elem a = 0; a < G.order(); ++a) {
    if (element_order(G, a) != full) continue;
    SubgroupSet s = subgroup_generated(G, {a});
    if (is_normal(G, s)) return s;
    return std::nullopt;
  }
  return std::nullopt;  // Sylow p-subgroup is not cyclic
}

class QuotientBuilder {
 public:
  static FiniteGroup build(const FiniteGroup& G, const SubgroupSet& N) {
    const int n = G.order();
    const int k = N.order();
    std::vector<Elem> coset_of(n, -1);
    std::vector<Elem> reps;
    // Ascending scan labels cosets by smallest member; the identity's
    // coset is then moved to index 0.
    for (Elem g = 0; g < n; ++g) {
      if (coset_of[g] >= 0) continue;
      const Elem id = static_cast<Elem>(reps.size());
      reps.push_back(g);
      for (Elem x : N.members) coset_of[G.mul(g, x)] = id;
    }
    const Elem e_coset = coset_of[G.identity()];
    if (e_coset != 0) {
      std::swap(reps[0], reps[e_coset]);
      for (Elem g = 0; g < n; ++g) {
        if (coset_of[g] == e_coset)
          coset_of[g] = 0;
        else if (coset_of[g] == 0)
          coset_of[g] = e_coset;
      }
    }
    const int q = n / k;
    std::vector<Elem> table(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        table[static_cast<std::size_t>(i) * q + j] = coset_of[G.mul(reps[i], reps[j])];
    return FiniteGroup(G.name() + "/" + std::to_string(k), q, std::move(table),
                       /*trusted=*/true);
  }
};

/// Group on the left cosets gN. Requires N normal (checked).
inline FiniteGroup quotient(const FiniteGroup& G, const SubgroupSet& N) {
  if (N.parent != &G) throw Error("quotient: subgroup does not belong to this group");
  if (!is_normal(G, N)) throw Error("quotient: subgroup is not normal");
  return QuotientBuilder::build(G, N);
}

}  // namespace psik
