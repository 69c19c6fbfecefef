#pragma once

// Regression harness over the reference values this engine is calibrated
// against, plus the property sweeps that gate a release. Each item is an
// independent check with a stable id; the runner prints one line per
// item. Everything is exact arithmetic; there are no tolerances.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "psik/catalog.hpp"
#include "psik/criteria.hpp"
#include "psik/groupdef.hpp"
#include "psik/psi.hpp"
#include "psik/report.hpp"
#include "psik/structure.hpp"

namespace psik {

enum class CheckStatus { Pass, Fail, WindowLimited };

struct CheckResult {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // first failure, for diagnostics
};

struct VerifyOptions {
  KRange k_range{4, 32};     // window handed to the MainPsiK scanner
  bool inject_fault = false; // corrupt one reference value; the run must then fail
};

/// Z_n : Z_2 with the inverting action x -> -x.
inline FiniteGroup dihedral_style(long long n, const BuildLimits& limits = {}) {
  FiniteGroup zn = cyclic_group(n, limits);
  ActionSpec action;
  action.normal_order = static_cast<int>(n);
  std::vector<Elem> inv(n);
  for (long long x = 0; x < n; ++x) inv[x] = static_cast<Elem>((n - x) % n);
  action.maps = {std::move(inv)};
  return semidirect_product(zn, cyclic_group(2, limits), action, {1}, limits);
}

/// The standing test corpus: all Z_n (n <= 120), the Klein four-group,
/// S3, S4, S5, A5, the dihedral-style products Z_n : Z_2 (n <= 50), and
/// the order-156 case-study groups H1 and H2.
inline std::vector<FiniteGroup> verification_corpus() {
  std::vector<FiniteGroup> corpus;
  for (long long n = 1; n <= 120; ++n) corpus.push_back(cyclic_group(n));
  corpus.push_back(catalog("V4"));
  corpus.push_back(catalog("S3"));
  corpus.push_back(catalog("S4"));
  corpus.push_back(catalog("S5"));
  corpus.push_back(catalog("A5"));
  for (long long n = 1; n <= 50; ++n) {
    FiniteGroup d = dihedral_style(n);
    d.rename("Z" + std::to_string(n) + ":Z2");
    corpus.push_back(std::move(d));
  }
  corpus.push_back(catalog("H1"));
  corpus.push_back(catalog("H2"));
  return corpus;
}

namespace detail {

class CheckRecorder {
 public:
  explicit CheckRecorder(std::string id, std::string description)
      : result_{std::move(id), std::move(description), CheckStatus::Pass, ""} {}

  void require(bool ok, const std::string& what) {
    if (!ok && result_.status == CheckStatus::Pass) {
      result_.status = CheckStatus::Fail;
      result_.detail = what;
    }
  }
  void window_limited(const std::string& why) {
    if (result_.status == CheckStatus::Pass) {
      result_.status = CheckStatus::WindowLimited;
      result_.detail = why;
    }
  }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

inline BigInt psi_of(const FiniteGroup& G) { return psi_k(G, 1); }

}  // namespace detail

/// Run the full verification suite. Results come back in fixed order.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opts = {}) {
  std::vector<CheckResult> results;
  const std::vector<FiniteGroup> corpus = verification_corpus();
  const FiniteGroup a5 = catalog("A5");
  const FiniteGroup z60 = cyclic_group(60);

  // One reference value is deliberately corruptible so the harness can
  // demonstrate it actually bites.
  const BigInt psi_a5_expected = opts.inject_fault ? 212 : 211;

  {
    detail::CheckRecorder c("01-base-values", "psi(A5) = 211 and psi(Z60) = 1617");
    c.require(detail::psi_of(a5) == psi_a5_expected,
              "psi(A5) = " + detail::psi_of(a5).str());
    c.require(detail::psi_of(z60) == 1617, "psi(Z60) = " + detail::psi_of(z60).str());
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c("02-closed-forms",
                            "psi_k of A5 and Z60 match their closed forms for k = 1..10");
    const OrderSpectrum sa = order_spectrum(a5);
    const OrderSpectrum sz = order_spectrum(z60);
    for (int k = 1; k <= 10; ++k) {
      c.require(psi_k(sa, k) == psi_k_a5_closed(k), "A5 mismatch at k=" + std::to_string(k));
      c.require(psi_k(sz, k) == psi_k_z60_closed(k), "Z60 mismatch at k=" + std::to_string(k));
      c.require(psi_k_cyclic(60, k) == psi_k_z60_closed(k),
                "divisor sum mismatch at k=" + std::to_string(k));
    }
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c("03-dk-exact",
                            "d_k(1) = 211/1617 and d_k = psi_k(A5)/psi_k(Z60) for k = 1..20");
    c.require(d_k(1) == ExactRational(211, 1617), "d_k(1) = " + d_k(1).str());
    const OrderSpectrum sa = order_spectrum(a5);
    const OrderSpectrum sz = order_spectrum(z60);
    for (int k = 1; k <= 20; ++k)
      c.require(d_k(k) == ExactRational(psi_k(sa, k), psi_k(sz, k)),
                "mismatch at k=" + std::to_string(k));
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c("04-claim-grid",
                            "d_k > 1/(2^k p^(k-1)) on the asserted (p, k) grid");
    for (long long p = 11; p <= 199; ++p) {
      if (!is_prime(p)) continue;
      for (int k = 4; k <= 25; ++k)
        c.require(claim_inequality_holds(p, k),
                  "fails at p=" + std::to_string(p) + ", k=" + std::to_string(k));
    }
    for (int k = 13; k <= 25; ++k)
      c.require(claim_inequality_holds(7, k), "fails at p=7, k=" + std::to_string(k));
    c.require(!claim_inequality_holds(7, 4), "unexpectedly holds at p=7, k=4");
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c("05-order156-thresholds",
                            "order-156 criterion thresholds as exact rationals");
    c.require(psi_k_cyclic(156, 1) == 12089, "psi(Z156) = " + psi_k_cyclic(156, 1).str());
    c.require(psi_k(cyclic_group(156), 1) == 12089, "group enumeration for Z156 disagrees");
    const ExactRational t1(25 * psi_k_cyclic(156, 1), 167);
    const ExactRational t2(211 * psi_k_cyclic(156, 1), 1617);
    const ExactRational t3(BigInt(156) * 211, 60);
    const ExactRational t4(BigInt(211) * 156 * 156, 3600);
    c.require(t1 == ExactRational(302225, 167), "HLM2018 threshold = " + t1.str());
    c.require(t2 == ExactRational(2550779, 1617), "AzadKhosravi threshold = " + t2.str());
    c.require(t3 == ExactRational(2743, 5), "AverageOrder boundary = " + t3.str());
    c.require(t4 == ExactRational(5134896, 3600), "Tarnauceanu boundary = " + t4.str());
    // Integer boundaries around each threshold.
    c.require(ExactRational(1809) < t1 && t1 < ExactRational(1810), "1809 < t1 < 1810 fails");
    c.require(ExactRational(1577) < t2 && t2 < ExactRational(1578), "1577 < t2 < 1578 fails");
    c.require(ExactRational(548) < t3 && t3 < ExactRational(549), "548 < t3 < 549 fails");
    c.require(ExactRational(1426) < t4 && t4 < ExactRational(1427), "1426 < t4 < 1427 fails");
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c(
        "06-h1-h2", "H1 and H2: order 156, 549 < psi < 1426, MainPsiK at k = 4, oracle solvable");
    const bool window_has_4 = opts.k_range.lo <= 4 && 4 <= opts.k_range.hi;
    for (const char* name : {"H1", "H2"}) {
      const FiniteGroup g = catalog(name);
      const BigInt psi = detail::psi_of(g);
      c.require(g.order() == 156, std::string(name) + " order = " + std::to_string(g.order()));
      c.require(psi > 549 && psi < 1426, std::string(name) + " psi = " + psi.str());
      c.require(is_solvable(g), std::string(name) + " oracle says non-solvable");
      const CriterionVerdict v = crit_main_psi_k(g, opts.k_range);
      if (window_has_4) {
        c.require(v.certified() && v.k_used == 4,
                  std::string(name) + " not certified at k=4 (verdict " +
                      to_string(v.verdict) + ")");
      } else {
        c.window_limited("scan window " + std::to_string(opts.k_range.lo) + ".." +
                         std::to_string(opts.k_range.hi) + " excludes k=4");
      }
    }
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c("07-soundness",
                            "no criterion certifies a group the derived-series oracle rejects");
    RunOptions ro;
    ro.k_range = opts.k_range;
    for (const FiniteGroup& g : corpus) {
      const CriteriaReport report = run_all(g, ro);
      c.require(report.oracle_solvable.has_value(), g.name() + ": oracle missing");
      c.require(report.consistent, g.name() + ": certified against a non-solvable oracle");
      if (g.name() == "A5" || g.name() == "S5")
        c.require(!report.any_certified(), g.name() + " received a certification");
    }
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c("08-bound-properties",
                            "maximality, coprime products, cyclic-Sylow bound, power bound, "
                            "phi lower bound");
    // psi_k(G) <= psi_k(Z_n), equality exactly for cyclic groups.
    for (const FiniteGroup& g : corpus) {
      const OrderSpectrum s = order_spectrum(g);
      const bool cyclic = is_cyclic(g);
      for (int k = 1; k <= 8; ++k) {
        const BigInt lhs = psi_k(s, k);
        const BigInt rhs = psi_k_cyclic(g.order(), k);
        c.require(cyclic ? lhs == rhs : lhs < rhs,
                  g.name() + " maximality fails at k=" + std::to_string(k));
      }
    }
    // psi_k(A x B) = psi_k(A) psi_k(B) iff the orders are coprime.
    {
      std::vector<FiniteGroup> factors;
      for (long long n : {2, 3, 4, 5, 6}) factors.push_back(cyclic_group(n));
      factors.push_back(catalog("S3"));
      for (const auto& A : factors)
        for (const auto& B : factors) {
          const FiniteGroup P = direct_product(A, B);
          const bool coprime = gcd_ll(A.order(), B.order()) == 1;
          for (int k = 1; k <= 5; ++k) {
            const BigInt lhs = psi_k(P, k);
            const BigInt rhs = psi_k(A, k) * psi_k(B, k);
            c.require(coprime ? lhs == rhs : lhs < rhs,
                      A.name() + " x " + B.name() + " product rule fails at k=" +
                          std::to_string(k));
          }
        }
    }
    // Cyclic normal Sylow: psi_k(G) <= psi_k(P) psi_k(G/P), equality iff
    // P is central. Z6 gives the equality case, S3 the strict one.
    for (const char* name : {"Z6", "S3"}) {
      const FiniteGroup g = catalog(name);
      const auto sylow = cyclic_normal_sylow(g, 3);
      c.require(sylow.has_value(), std::string(name) + ": no cyclic normal Sylow 3-subgroup");
      if (!sylow) continue;
      const FiniteGroup q = quotient(g, *sylow);
      const SubgroupSet z = center(g);
      bool central = true;
      for (Elem x : sylow->members) central = central && z.contains(x);
      for (int k = 1; k <= 6; ++k) {
        const BigInt lhs = psi_k(g, k);
        const BigInt rhs = psi_k_cyclic(sylow->order(), k) * psi_k(q, k);
        c.require(central ? lhs == rhs : lhs < rhs,
                  std::string(name) + " Sylow bound fails at k=" + std::to_string(k));
      }
      c.require(central == (std::string(name) == "Z6"),
                std::string(name) + " centrality expectation wrong");
    }
    // Non-cyclic power bound: psi_k(G) q^(k-1) <= n^(k-1) psi(G).
    for (const FiniteGroup& g : corpus) {
      if (is_cyclic(g)) continue;
      const OrderSpectrum s = order_spectrum(g);
      const auto primes = prime_divisors(g.order());
      const BigInt q = primes.front();
      for (int k = 2; k <= 6; ++k)
        c.require(psi_k(s, k) * big_pow(q, k - 1) <=
                      big_pow(BigInt(g.order()), k - 1) * psi_k(s, 1),
                  g.name() + " power bound fails at k=" + std::to_string(k));
    }
    // phi(n) p >= n with p the largest prime divisor.
    for (long long n = 2; n <= 100000; ++n) {
      const auto primes = prime_divisors(n);
      if (euler_phi(n) * primes.back() < n) {
        c.require(false, "phi bound fails at n=" + std::to_string(n));
        break;
      }
    }
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c("09-k-reduction",
                            "PhiBoundK at k = 1 agrees with PhiBound on every corpus group");
    for (const FiniteGroup& g : corpus) {
      const OrderSpectrum s = order_spectrum(g);
      const CriterionVerdict a = detail::phi_bound(g.name(), s);
      const CriterionVerdict b = detail::phi_bound_k(g.name(), s, 1);
      c.require(a.verdict == b.verdict && a.lhs == b.lhs && a.rhs == b.rhs,
                g.name() + ": verdicts differ");
    }
    results.push_back(c.take());
  }
  {
    detail::CheckRecorder c("10-determinism", "two criteria sweeps render byte-identical TSV");
    RunOptions ro;
    ro.k_range = opts.k_range;
    auto render_all = [&] {
      std::vector<ReportRow> rows;
      for (const FiniteGroup& g : corpus)
        for (auto& r : to_rows(run_all(g, ro))) rows.push_back(std::move(r));
      return render_report(rows);
    };
    const std::string first = render_all();
    const std::string second = render_all();
    c.require(!first.empty() && first == second, "renders differ");
    results.push_back(c.take());
  }
  return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

}  // namespace psik
