#pragma once

// Sufficient solvability criteria, each an exact-rational comparison.
// A criterion can certify solvability; it can never refute it. Verdict
// vocabulary: SolvableCertified (relation holds), Inconclusive
// (hypotheses met, relation fails - proves nothing), Inapplicable
// (hypotheses exclude the group).

#include <optional>
#include <string>
#include <vector>

#include "psik/psi.hpp"
#include "psik/structure.hpp"

namespace psik {

enum class CriterionId {
  HLM2018,
  AzadKhosravi,
  AverageOrder,
  Tarnauceanu,
  MainPsiK,
  PhiBound,
  PhiBoundK,
  Burnside,
  CyclicDetect,
};

inline const char* to_string(CriterionId id) {
  switch (id) {
    case CriterionId::HLM2018: return "HLM2018";
    case CriterionId::AzadKhosravi: return "AzadKhosravi";
    case CriterionId::AverageOrder: return "AverageOrder";
    case CriterionId::Tarnauceanu: return "Tarnauceanu";
    case CriterionId::MainPsiK: return "MainPsiK";
    case CriterionId::PhiBound: return "PhiBound";
    case CriterionId::PhiBoundK: return "PhiBoundK";
    case CriterionId::Burnside: return "Burnside";
    case CriterionId::CyclicDetect: return "CyclicDetect";
  }
  return "?";
}

enum class Relation { strictly_greater, strictly_less, at_least };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::strictly_greater: return "strictly_greater";
    case Relation::strictly_less: return "strictly_less";
    case Relation::at_least: return "at_least";
  }
  return "?";
}

enum class Verdict { SolvableCertified, Inconclusive, Inapplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::SolvableCertified: return "SolvableCertified";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "?";
}

inline bool relation_holds(const ExactRational& lhs, Relation rel, const ExactRational& rhs) {
  switch (rel) {
    case Relation::strictly_greater: return lhs > rhs;
    case Relation::strictly_less: return lhs < rhs;
    case Relation::at_least: return lhs >= rhs;
  }
  return false;
}

struct CriterionVerdict {
  CriterionId criterion;
  std::string group_name;
  long long n = 0;
  std::optional<int> k_used;
  ExactRational lhs;
  ExactRational rhs;
  Relation relation = Relation::strictly_greater;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;  // diagnostic only, never verdict-bearing

  bool certified() const { return verdict == Verdict::SolvableCertified; }
};

/// Inclusive k scan window.
struct KRange {
  int lo = 4;
  int hi = 32;

  bool empty() const { return lo > hi; }
};

namespace detail {

inline CriterionVerdict decide(CriterionId id, const std::string& name, long long n,
                               ExactRational lhs, Relation rel, ExactRational rhs,
                               std::optional<int> k_used = std::nullopt) {
  CriterionVerdict v;
  v.criterion = id;
  v.group_name = name;
  v.n = n;
  v.k_used = k_used;
  v.relation = rel;
  v.verdict = relation_holds(lhs, rel, rhs) ? Verdict::SolvableCertified : Verdict::Inconclusive;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

inline CriterionVerdict inapplicable(CriterionId id, const std::string& name, long long n,
                                     Relation rel, std::string note) {
  CriterionVerdict v;
  v.criterion = id;
  v.group_name = name;
  v.n = n;
  v.relation = rel;
  v.verdict = Verdict::Inapplicable;
  v.note = std::move(note);
  return v;
}

// psi(G) > (25/167) psi(Z_n); 6.68 is treated as the exact rational 167/25.
inline CriterionVerdict hlm_2018(const std::string& name, const OrderSpectrum& s) {
  const long long n = s.group_order;
  return decide(CriterionId::HLM2018, name, n, ExactRational(psi_k(s, 1)),
                Relation::strictly_greater, ExactRational(25 * psi_k_cyclic(n, 1), 167));
}

// psi(G) > (211/1617) psi(Z_n).
inline CriterionVerdict azad_khosravi(const std::string& name, const OrderSpectrum& s) {
  const long long n = s.group_order;
  return decide(CriterionId::AzadKhosravi, name, n, ExactRational(psi_k(s, 1)),
                Relation::strictly_greater, ExactRational(211 * psi_k_cyclic(n, 1), 1617));
}

// psi(G) < n * 211 / 60 (average element order below that of A5).
inline CriterionVerdict average_order(const std::string& name, const OrderSpectrum& s) {
  const long long n = s.group_order;
  return decide(CriterionId::AverageOrder, name, n, ExactRational(psi_k(s, 1)),
                Relation::strictly_less, ExactRational(BigInt(n) * 211, 60));
}

// psi(G) / n^2 > 211 / 3600.
inline CriterionVerdict tarnauceanu(const std::string& name, const OrderSpectrum& s) {
  const long long n = s.group_order;
  return decide(CriterionId::Tarnauceanu, name, n, ExactRational(psi_k(s, 1), BigInt(n) * n),
                Relation::strictly_greater, ExactRational(211, 3600));
}

// psi_k(G) > D_k psi_k(Z_n) for some k in the window; the hypothesis on
// the largest prime divisor p of n gates the window: k >= 4 for p > 7,
// k >= 13 for p = 7, no k for p <= 5.
inline CriterionVerdict main_psi_k(const std::string& name, const OrderSpectrum& s,
                                   KRange k_range) {
  const long long n = s.group_order;
  const auto primes = prime_divisors(n);
  const long long p = primes.empty() ? 1 : primes.back();
  if (p <= 5)
    return inapplicable(CriterionId::MainPsiK, name, n, Relation::strictly_greater,
                        "largest prime divisor of n is at most 5");
  const int k_min = p == 7 ? 13 : 4;
  KRange eff{std::max(k_range.lo, k_min), k_range.hi};
  if (eff.empty())
    return inapplicable(CriterionId::MainPsiK, name, n, Relation::strictly_greater,
                        "scan window " + std::to_string(k_range.lo) + ".." +
                            std::to_string(k_range.hi) + " is below the k >= " +
                            std::to_string(k_min) + " hypothesis");
  CriterionVerdict last;
  for (int k = eff.lo; k <= eff.hi; ++k) {
    const ExactRational dk = d_k(k);
    ExactRational rhs(dk.num() * psi_k_cyclic(n, k), dk.den());
    last = decide(CriterionId::MainPsiK, name, n, ExactRational(psi_k(s, k)),
                  Relation::strictly_greater, std::move(rhs), k);
    if (last.certified()) return last;
  }
  // Sides shown are those of the last k tried; the note records the window.
  last.note = "no k in " + std::to_string(eff.lo) + ".." + std::to_string(eff.hi) + " certifies";
  return last;
}

// psi(G) >= (3n/5) phi(n), non-strict.
inline CriterionVerdict phi_bound(const std::string& name, const OrderSpectrum& s) {
  const long long n = s.group_order;
  return decide(CriterionId::PhiBound, name, n, ExactRational(psi_k(s, 1)), Relation::at_least,
                ExactRational(BigInt(3) * n * euler_phi(n), 5));
}

// psi_k(G) >= (3 n^k / (5 q^(k-1))) phi(n) with q the smallest prime
// divisor of n, non-strict.
inline CriterionVerdict phi_bound_k(const std::string& name, const OrderSpectrum& s, int k) {
  if (k < 1) throw Error("crit_phi_bound_k: k must be at least 1");
  const long long n = s.group_order;
  const auto primes = prime_divisors(n);
  const long long q = primes.empty() ? 1 : primes.front();
  ExactRational rhs(BigInt(3) * big_pow(BigInt(n), k) * euler_phi(n),
                    BigInt(5) * big_pow(BigInt(q), k - 1));
  return decide(CriterionId::PhiBoundK, name, n, ExactRational(psi_k(s, k)), Relation::at_least,
                std::move(rhs), k);
}

// |G| = p^a q^b is always solvable: at most two distinct prime divisors.
inline CriterionVerdict burnside(const std::string& name, const OrderSpectrum& s) {
  const long long n = s.group_order;
  const auto omega = static_cast<long long>(prime_divisors(n).size());
  return decide(CriterionId::Burnside, name, n, ExactRational(2), Relation::at_least,
                ExactRational(omega));
}

// Exceeding the non-cyclic ceiling (1+3*2^k)/(1+2^k+2*4^k) psi_k(Z_n)
// forces the group to be cyclic, hence solvable.
inline CriterionVerdict cyclic_detect(const std::string& name, const OrderSpectrum& s, int k) {
  if (k < 1) throw Error("crit_cyclic_detect: k must be at least 1");
  const long long n = s.group_order;
  ExactRational rhs((1 + 3 * big_pow(2, k)) * psi_k_cyclic(n, k),
                    1 + big_pow(2, k) + 2 * big_pow(4, k));
  return decide(CriterionId::CyclicDetect, name, n, ExactRational(psi_k(s, k)),
                Relation::strictly_greater, std::move(rhs), k);
}

}  // namespace detail

inline CriterionVerdict crit_hlm_2018(const FiniteGroup& G) {
  return detail::hlm_2018(G.name(), order_spectrum(G));
}
inline CriterionVerdict crit_azad_khosravi(const FiniteGroup& G) {
  return detail::azad_khosravi(G.name(), order_spectrum(G));
}
inline CriterionVerdict crit_average_order(const FiniteGroup& G) {
  return detail::average_order(G.name(), order_spectrum(G));
}
inline CriterionVerdict crit_tarnauceanu(const FiniteGroup& G) {
  return detail::tarnauceanu(G.name(), order_spectrum(G));
}
inline CriterionVerdict crit_main_psi_k(const FiniteGroup& G, KRange k_range = {}) {
  return detail::main_psi_k(G.name(), order_spectrum(G), k_range);
}
inline CriterionVerdict crit_phi_bound(const FiniteGroup& G) {
  return detail::phi_bound(G.name(), order_spectrum(G));
}
inline CriterionVerdict crit_phi_bound_k(const FiniteGroup& G, int k) {
  return detail::phi_bound_k(G.name(), order_spectrum(G), k);
}
inline CriterionVerdict crit_burnside(const FiniteGroup& G) {
  return detail::burnside(G.name(), order_spectrum(G));
}
inline CriterionVerdict crit_cyclic_detect(const FiniteGroup& G, int k) {
  return detail::cyclic_detect(G.name(), order_spectrum(G), k);
}

struct RunOptions {
  KRange k_range{4, 32};
  long long oracle_cap = 5000;  // derived-series oracle runs automatically up to this order
  bool skip_oracle = false;
  bool force_oracle = false;  // run the oracle even above the cap
};

struct CriteriaReport {
  std::string group_name;
  long long order = 0;
  OrderSpectrum spectrum;
  KRange k_range;
  std::vector<CriterionVerdict> verdicts;  // fixed criterion order
  std::optional<bool> oracle_solvable;
  bool consistent = true;  // no certification contradicts the oracle

  bool any_certified() const {
    for (const auto& v : verdicts)
      if (v.certified()) return true;
    return false;
  }
};

namespace detail {

// Scanning variant for the k-parameterized checkers: first certifying k
// wins; otherwise the verdict at the last k is reported.
template <typename CheckFn>
CriterionVerdict scan_k(KRange r, CheckFn&& check) {
  CriterionVerdict last;
  for (int k = r.lo; k <= r.hi; ++k) {
    last = check(k);
    if (last.certified()) return last;
  }
  return last;
}

}  // namespace detail

/// Run every criterion in fixed order, then cross-check certifications
/// against the derived-series oracle. Checker hypothesis failures show
/// up as Inapplicable entries, never as errors.
inline CriteriaReport run_all(const FiniteGroup& G, const RunOptions& opts = {}) {
  CriteriaReport report;
  report.group_name = G.name();
  report.order = G.order();
  report.spectrum = order_spectrum(G);
  report.k_range = opts.k_range;
  const OrderSpectrum& s = report.spectrum;
  const std::string& name = G.name();
  KRange scan = opts.k_range;
  if (scan.empty()) scan = KRange{1, 1};

  report.verdicts.push_back(detail::hlm_2018(name, s));
  report.verdicts.push_back(detail::azad_khosravi(name, s));
  report.verdicts.push_back(detail::average_order(name, s));
  report.verdicts.push_back(detail::tarnauceanu(name, s));
  report.verdicts.push_back(detail::main_psi_k(name, s, opts.k_range));
  report.verdicts.push_back(detail::phi_bound(name, s));
  report.verdicts.push_back(
      detail::scan_k(scan, [&](int k) { return detail::phi_bound_k(name, s, k); }));
  report.verdicts.push_back(detail::burnside(name, s));
  report.verdicts.push_back(
      detail::scan_k(scan, [&](int k) { return detail::cyclic_detect(name, s, k); }));

  const bool want_oracle =
      !opts.skip_oracle && (opts.force_oracle || G.order() <= opts.oracle_cap);
  if (want_oracle) report.oracle_solvable = is_solvable(G);
  report.consistent =
      !(report.oracle_solvable.has_value() && !*report.oracle_solvable && report.any_certified());
  return report;
}

}  // namespace psik
