#pragma once

// Built-in groups used throughout the tests and the CLI: cyclic groups
// by name ("Z60"), the small symmetric/alternating groups, the Klein
// four-group, Z60 in product form, and the two order-156 case-study
// groups H1, H2.

#include <string>
#include <vector>

#include "psik/group.hpp"

namespace psik {

namespace detail {

// x -> c*x mod n as an image array on Z_n.
inline std::vector<Elem> scaling_map(int n, int c) {
  std::vector<Elem> m(n);
  for (int x = 0; x < n; ++x) m[x] = static_cast<Elem>((static_cast<long long>(c) * x) % n);
  return m;
}

inline FiniteGroup symmetric_group(int degree, const BuildLimits& limits) {
  std::vector<std::vector<Elem>> cycle{{}};
  for (int i = 0; i < degree; ++i) cycle[0].push_back(i);
  return perm_group(degree,
                    {Permutation::from_cycles(degree, cycle),
                     Permutation::from_cycles(degree, {{0, 1}})},
                    limits);
}

// Z_13 : Z_6 with the order-6 action x -> 4x.
inline FiniteGroup z13_z6(const BuildLimits& limits) {
  ActionSpec action;
  action.normal_order = 13;
  action.maps = {scaling_map(13, 4)};
  return semidirect_product(cyclic_group(13, limits), cyclic_group(6, limits), action, {1},
                            limits);
}

// (Z_2 x Z_2) : (Z_13 : Z_3). The Z_3 level acts on Z_13 by x -> 3x and
// on the Klein four-group by cycling its three involutions; the Z_13
// level acts trivially on the four-group.
inline FiniteGroup h2_group(const BuildLimits& limits) {
  ActionSpec inner;
  inner.normal_order = 13;
  inner.maps = {scaling_map(13, 3)};
  FiniteGroup k = semidirect_product(cyclic_group(13, limits), cyclic_group(3, limits), inner,
                                     {1}, limits);
  FiniteGroup v4 = direct_product(cyclic_group(2, limits), cyclic_group(2, limits), limits);

  ActionSpec outer;
  outer.normal_order = 4;
  outer.maps = {
      {0, 1, 2, 3},  // generator (0,1) of the Z_13 level: trivial
      {0, 2, 3, 1},  // generator (1,0) of the Z_3 level: 1 -> 2 -> 3 -> 1
  };
  // In k, element 1 is the Z_13 generator and element 13 the Z_3 one.
  return semidirect_product(v4, k, outer, {1, 13}, limits);
}

}  // namespace detail

/// Names accepted by catalog() besides the "Z<n>" family.
inline std::vector<std::string> catalog_names() {
  return {"A5", "S3", "S4", "S5", "V4", "Z2xZ2", "Z4xZ3xZ5", "Z13:Z6", "H1", "H2"};
}

/// Look up a built-in group. "Z<n>" resolves to the cyclic group of
/// order n; unknown names throw.
inline FiniteGroup catalog(const std::string& name, const BuildLimits& limits = {}) {
  auto named = [&](FiniteGroup g) {
    g.rename(name);
    return g;
  };
  if (name == "A5")
    return named(perm_group(5,
                            {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}),
                             Permutation::from_cycles(5, {{0, 1, 2}})},
                            limits));
  if (name == "S3") return named(detail::symmetric_group(3, limits));
  if (name == "S4") return named(detail::symmetric_group(4, limits));
  if (name == "S5") return named(detail::symmetric_group(5, limits));
  if (name == "V4" || name == "Z2xZ2")
    return named(direct_product(cyclic_group(2, limits), cyclic_group(2, limits), limits));
  if (name == "Z4xZ3xZ5")
    return named(direct_product(
        direct_product(cyclic_group(4, limits), cyclic_group(3, limits), limits),
        cyclic_group(5, limits), limits));
  if (name == "Z13:Z6") return named(detail::z13_z6(limits));
  if (name == "H1")
    return named(direct_product(cyclic_group(2, limits), detail::z13_z6(limits), limits));
  if (name == "H2") return named(detail::h2_group(limits));
  if (name.size() > 1 && name[0] == 'Z') {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      digits = digits && name[i] >= '0' && name[i] <= '9';
    if (digits) {
      try {
        return cyclic_group(std::stoll(name.substr(1)), limits);
      } catch (const std::out_of_range&) {
        throw CapExceeded("group too large: " + name);
      }
    }
  }
  throw Error("unknown catalog group '" + name + "'");
}

}  // namespace psik
