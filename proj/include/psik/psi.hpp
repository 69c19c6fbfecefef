#pragma once

// Element-order power sums. The order spectrum (order -> count) is the
// sufficient statistic: psi_k(G) = sum over d of count_d * d^k, computed
// in arbitrary precision. Includes the cyclic closed form, the threshold
// constant d_k = psi_k(A5)/psi_k(Z60) and the cross-multiplied form of
// the 1/(2^k p^(k-1)) inequality.

#include <map>
#include <stdexcept>

#include "psik/group.hpp"
#include "psik/numbers.hpp"
#include "psik/rational.hpp"

namespace psik {

struct OrderSpectrum {
  long long group_order = 0;
  std::map<long long, long long> counts;  // element order -> multiplicity
};

inline OrderSpectrum order_spectrum(const FiniteGroup& G) {
  OrderSpectrum s;
  s.group_order = G.order();
  for (Elem a = 0; a < G.order(); ++a) ++s.counts[element_order(G, a)];
  return s;
}

/// sum of count_d * d^k over the spectrum, exact. k >= 1.
inline BigInt psi_k(const OrderSpectrum& spectrum, int k) {
  if (k < 1) throw Error("psi_k: k must be at least 1");
  BigInt total = 0;
  for (const auto& [d, count] : spectrum.counts) total += count * big_pow(BigInt(d), k);
  return total;
}

inline BigInt psi_k(const FiniteGroup& G, int k) { return psi_k(order_spectrum(G), k); }

/// psi_k(Z_n) without building the group: sum over divisors d of n of
/// phi(d) * d^k. Z_n has exactly phi(d) elements of each order d | n.
inline BigInt psi_k_cyclic(long long n, int k) {
  if (n < 1) throw Error("psi_k_cyclic: n must be at least 1");
  if (k < 1) throw Error("psi_k_cyclic: k must be at least 1");
  BigInt total = 0;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += euler_phi(d) * big_pow(BigInt(d), k);
    if (d != n / d) total += euler_phi(n / d) * big_pow(BigInt(n / d), k);
  }
  return total;
}

/// 1 + 15*2^k + 20*3^k + 24*5^k, the A5 power sum by conjugacy classes.
inline BigInt psi_k_a5_closed(int k) {
  return 1 + 15 * big_pow(2, k) + 20 * big_pow(3, k) + 24 * big_pow(5, k);
}

/// (1 + 2^k + 2*4^k)(1 + 2*3^k)(1 + 4*5^k) = psi_k(Z4) psi_k(Z3) psi_k(Z5).
inline BigInt psi_k_z60_closed(int k) {
  return (1 + big_pow(2, k) + 2 * big_pow(4, k)) * (1 + 2 * big_pow(3, k)) *
         (1 + 4 * big_pow(5, k));
}

/// The sharp threshold constant D_k = psi_k(A5) / psi_k(Z60), reduced.
inline ExactRational d_k(int k) {
  if (k < 1) throw Error("d_k: k must be at least 1");
  return ExactRational(psi_k_a5_closed(k), psi_k_z60_closed(k));
}

/// Exact test of D_k > 1 / (2^k p^(k-1)).
inline bool claim_inequality_holds(long long p, int k) {
  if (!is_prime(p)) throw Error("claim_inequality_holds: p must be prime");
  if (k < 1) throw Error("claim_inequality_holds: k must be at least 1");
  const ExactRational dk = d_k(k);
  return dk.num() * big_pow(2, k) * big_pow(BigInt(p), k - 1) > dk.den();
}

}  // namespace psik
