#pragma once

// Elementary number theory on machine integers: trial-division
// factorization, Euler phi, prime queries. Group orders stay small
// (default cap 20000), so nothing probabilistic is needed here.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace psik {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Distinct prime divisors, ascending. Empty for n = 1.
inline std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline long long euler_phi(long long n) {
  long long phi = n;
  for (const auto& [p, e] : factorize(n)) phi -= phi / p;
  return phi;
}

/// Largest power of p dividing n.
inline long long p_part(long long n, long long p) {
  long long q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

inline long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace psik
