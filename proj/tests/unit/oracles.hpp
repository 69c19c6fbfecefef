#pragma once

// Brute-force reference computations for the test suite. These stay
// deliberately independent of the library's own code paths: orders by
// direct iteration, psi by summing over elements, phi by gcd counting,
// closures by pairwise-product fixpoint.

#include <numeric>
#include <set>
#include <vector>

#include "psik/group.hpp"
#include "psik/rational.hpp"

namespace oracle {

inline long long order_of(const psik::FiniteGroup& G, psik::Elem a) {
  psik::Elem x = a;
  long long m = 1;
  while (x != G.identity()) {
    x = G.mul(x, a);
    ++m;
  }
  return m;
}

inline psik::BigInt psi_k(const psik::FiniteGroup& G, int k) {
  psik::BigInt total = 0;
  for (psik::Elem a = 0; a < G.order(); ++a)
    total += psik::big_pow(psik::BigInt(order_of(G, a)), k);
  return total;
}

inline long long phi(long long n) {
  long long count = 0;
  for (long long i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++count;
  return count;
}

/// Pairwise-product fixpoint closure (not the BFS the library uses).
inline std::set<psik::Elem> closure(const psik::FiniteGroup& G, std::set<psik::Elem> s) {
  s.insert(G.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<psik::Elem> next = s;
    for (psik::Elem a : s)
      for (psik::Elem b : s) {
        next.insert(G.mul(a, b));
        next.insert(G.inverse(a));
      }
    if (next.size() != s.size()) {
      s = std::move(next);
      grew = true;
    }
  }
  return s;
}

}  // namespace oracle
