#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "psik/catalog.hpp"
#include "psik/psi.hpp"

using namespace psik;

TEST_CASE("order spectra", "[psi]") {
  const OrderSpectrum z6 = order_spectrum(cyclic_group(6));
  CHECK(z6.counts == std::map<long long, long long>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});

  const OrderSpectrum a5 = order_spectrum(catalog("A5"));
  CHECK(a5.counts == std::map<long long, long long>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});

  const OrderSpectrum trivial = order_spectrum(cyclic_group(1));
  CHECK(trivial.counts == std::map<long long, long long>{{1, 1}});
}

TEST_CASE("spectrum invariants", "[psi][property]") {
  for (const auto& g : {catalog("A5"), catalog("S4"), catalog("H1"), catalog("H2"),
                        catalog("Z13:Z6"), cyclic_group(96)}) {
    const OrderSpectrum s = order_spectrum(g);
    long long total = 0;
    for (const auto& [d, count] : s.counts) {
      total += count;
      CHECK(s.group_order % d == 0);
      CHECK(count % euler_phi(d) == 0);
    }
    CHECK(total == s.group_order);
    CHECK(s.counts.at(1) == 1);
  }
}

TEST_CASE("psi_k values", "[psi]") {
  const OrderSpectrum a5 = order_spectrum(catalog("A5"));
  CHECK(psi_k(a5, 1) == 211);
  CHECK(psi_k(a5, 2) == 841);  // 1 + 15*4 + 20*9 + 24*25
  CHECK(psi_k(order_spectrum(cyclic_group(60)), 1) == 1617);
  CHECK_THROWS_AS(psi_k(a5, 0), Error);
}

TEST_CASE("psi_k_cyclic closed form", "[psi]") {
  CHECK(psi_k_cyclic(1, 1) == 1);
  CHECK(psi_k_cyclic(1, 7) == 1);
  CHECK(psi_k_cyclic(6, 1) == 21);  // 1 + 1*2 + 2*3 + 2*6
  for (int k = 1; k <= 10; ++k) CHECK(psi_k_cyclic(60, k) == psi_k_z60_closed(k));
  CHECK_THROWS_AS(psi_k_cyclic(0, 1), Error);
  CHECK_THROWS_AS(psi_k_cyclic(6, 0), Error);
}

TEST_CASE("divisor sum agrees with enumeration", "[psi][property]") {
  for (long long n = 1; n <= 300; ++n) {
    const FiniteGroup g = cyclic_group(n);
    for (int k = 1; k <= 5; ++k) CHECK(psi_k_cyclic(n, k) == oracle::psi_k(g, k));
  }
}

TEST_CASE("psi_k is strictly increasing in k", "[psi][property]") {
  for (const auto& g : {catalog("A5"), catalog("V4"), cyclic_group(2), catalog("H2")}) {
    const OrderSpectrum s = order_spectrum(g);
    for (int k = 1; k <= 7; ++k) CHECK(psi_k(s, k) < psi_k(s, k + 1));
  }
}

TEST_CASE("maximality of the cyclic group", "[psi][property]") {
  for (const auto& g : {catalog("A5"), catalog("S4"), catalog("S5"), catalog("V4"),
                        catalog("H1"), catalog("H2"), catalog("Z4xZ3xZ5")}) {
    const OrderSpectrum s = order_spectrum(g);
    for (int k = 1; k <= 8; ++k) {
      const BigInt bound = psi_k_cyclic(g.order(), k);
      if (is_cyclic(g))
        CHECK(psi_k(s, k) == bound);
      else
        CHECK(psi_k(s, k) < bound);
    }
  }
}

TEST_CASE("non-cyclic ceiling with its equality witness", "[psi][property]") {
  // (1 + 3*2^k) / (1 + 2^k + 2*4^k) psi_k(Z_n) bounds every non-cyclic
  // group; Z2 x Z2 attains it.
  for (const auto& g : {catalog("V4"), catalog("A5"), catalog("S4"), catalog("Z13:Z6")}) {
    const OrderSpectrum s = order_spectrum(g);
    for (int k = 1; k <= 6; ++k) {
      const BigInt lhs = psi_k(s, k) * (1 + big_pow(2, k) + 2 * big_pow(4, k));
      const BigInt rhs = (1 + 3 * big_pow(2, k)) * psi_k_cyclic(g.order(), k);
      CHECK(lhs <= rhs);
      if (g.order() == 4) CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("product rule: equality exactly when orders are coprime", "[psi][property]") {
  const FiniteGroup z4 = cyclic_group(4), z6 = cyclic_group(6), z15 = cyclic_group(15);
  const FiniteGroup s3 = catalog("S3");
  for (int k = 1; k <= 5; ++k) {
    CHECK(psi_k(direct_product(z4, z15), k) == psi_k(z4, k) * psi_k(z15, k));
    CHECK(psi_k(direct_product(s3, cyclic_group(5)), k) ==
          psi_k(s3, k) * psi_k_cyclic(5, k));
    CHECK(psi_k(direct_product(z4, z6), k) < psi_k(z4, k) * psi_k(z6, k));
    CHECK(psi_k(direct_product(s3, s3), k) < psi_k(s3, k) * psi_k(s3, k));
  }
}

TEST_CASE("power bound for non-cyclic groups", "[psi][property]") {
  // psi_k(G) q^(k-1) <= n^(k-1) psi(G) with q the smallest prime divisor.
  for (const auto& g : {catalog("V4"), catalog("A5"), catalog("S5"), catalog("H2")}) {
    const OrderSpectrum s = order_spectrum(g);
    const BigInt q = prime_divisors(g.order()).front();
    for (int k = 2; k <= 6; ++k)
      CHECK(psi_k(s, k) * big_pow(q, k - 1) <= big_pow(BigInt(g.order()), k - 1) * psi_k(s, 1));
  }
}

TEST_CASE("d_k threshold constant", "[psi]") {
  CHECK(d_k(1) == ExactRational(211, 1617));
  CHECK(d_k(4) == ExactRational(16861, 215653727));
  CHECK(d_k(4).num() == 16861);          // 1 + 240 + 1620 + 15000
  CHECK(d_k(4).den() == 215653727);      // 529 * 163 * 2501
  for (int k = 1; k <= 40; ++k) CHECK(d_k(k) < ExactRational(1));
  CHECK_THROWS_AS(d_k(0), Error);
}

TEST_CASE("claim inequality", "[psi]") {
  CHECK(claim_inequality_holds(11, 4));
  CHECK(claim_inequality_holds(13, 7));
  CHECK(claim_inequality_holds(199, 25));
  CHECK(claim_inequality_holds(7, 13));
  CHECK_FALSE(claim_inequality_holds(7, 4));  // 16861/215653727 < 1/5488
  CHECK_THROWS_AS(claim_inequality_holds(6, 4), Error);
}
