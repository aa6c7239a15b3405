#pragma once

// Seeded, exact property harness over coincident root loci.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "discstrat/resultants.hpp"
#include "discstrat/strata.hpp"

namespace discstrat {

inline constexpr std::size_t kMinVerifyDegree = 2;
inline constexpr std::size_t kMaxVerifyDegree = 6;

struct TrialResult {
  std::size_t n = 0;
  Partition mu;
  std::uint64_t seed = 0;
  CoefficientPoint gamma;
  StratumReport report;
  bool invariants_ok = false;  // classifier agreement, order, chain, nesting, smoothness
  bool rank_ok = false;
  bool res_fact_ok = false;
  bool appendix_ok = false;
  std::optional<std::string> failure_detail;

  bool passed() const { return !failure_detail.has_value(); }
};

struct SuiteReport {
  std::size_t n = 0;
  std::size_t trials_per_partition = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<TrialResult> failures;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// rank of the Sylvester matrix of F_gamma, F'_gamma equals 2n - 1 - deg gcd.
inline bool check_rank_formula(const CoefficientPoint& gamma) {
  const std::size_t n = gamma.degree();
  if (n < 2) throw std::invalid_argument("rank formula needs degree n >= 2");
  const UniPoly f = gamma.polynomial();
  const auto d = static_cast<std::size_t>(gcd(f, derivative(f)).degree());
  const RationalMatrix m = evaluate(sylvester_f_fprime(n), gamma.coords());
  return rank_at_point(m) == 2 * n - 1 - d;
}

/// res_x(F + t, F') = (-1)^(n d) t^d res_x(F + t, F'/G) with G = gcd(F, F'),
/// d = deg G, and the right factor nonzero at t = 0.
inline bool check_res_factorization(const CoefficientPoint& gamma) {
  const std::size_t n = gamma.degree();
  if (n < 2) throw std::invalid_argument("resultant factorization needs degree n >= 2");
  const UniPoly f = gamma.polynomial();
  const UniPoly df = derivative(f);
  const auto [g, f_cof, df_cof] = gcd_and_cofactors(f, df);
  const auto d = static_cast<std::size_t>(g.degree());

  auto lift = [](const UniPoly& p) {
    std::vector<UniPoly> c;
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return DensePoly<UniPoly>(std::move(c));
  };
  DensePoly<UniPoly> f_plus_t = lift(f) + DensePoly<UniPoly>(UniPoly::monomial(BigRational(1), 1));

  const UniPoly lhs = resultant(f_plus_t, lift(df));
  const UniPoly right = resultant(f_plus_t, lift(df_cof));
  const BigRational sign((n * d) % 2 == 0 ? 1 : -1);
  const UniPoly rhs = UniPoly::monomial(sign, d) * right;
  return lhs == rhs && !is_zero(right[0]);
}

/// Valuation contract for the shift a_s -> a_s + t: v_s >= n - m, with
/// equality iff 0 is not a multiple root of F_gamma.
inline bool check_appendix_proposition(const CoefficientPoint& gamma, std::size_t s) {
  const std::size_t n = gamma.degree();
  if (s < 1 || s >= n) throw std::out_of_range("monomial shift index s must satisfy 1 <= s <= n-1");
  const std::size_t m = classify_by_gcd(gamma);
  const Order v = t_valuation_monomial_shift(gamma, s);
  const bool zero_is_multiple_root = is_zero(gamma[0]) && is_zero(gamma[1]);
  if (!v) return zero_is_multiple_root;  // infinite valuation exceeds n - m
  if (*v < n - m) return false;
  if ((*v == n - m) == zero_is_multiple_root) return false;
  if (!is_zero(gamma[0]) && *v != n - m) return false;
  return true;
}

/// Refinements of mu obtained by splitting one part into two.
inline std::vector<Partition> single_split_refinements(const Partition& mu) {
  std::vector<Partition> out;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i] == parts[i - 1]) continue;
    for (unsigned a = 1; a <= parts[i] / 2; ++a) {
      std::vector<unsigned> p(parts);
      p[i] = parts[i] - a;
      p.push_back(a);
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline void require_verify_degree(std::size_t n) {
  if (n < kMinVerifyDegree || n > kMaxVerifyDegree)
    throw std::out_of_range("verification supports degrees " + std::to_string(kMinVerifyDegree) + ".." +
                            std::to_string(kMaxVerifyDegree) + ", got " + std::to_string(n));
}

}  // namespace detail

/// seed xor hash(partition index, trial index).
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t partition_index, std::size_t trial_index) {
  return seed ^ detail::splitmix64((static_cast<std::uint64_t>(partition_index) << 32) ^
                                   static_cast<std::uint64_t>(trial_index));
}

/// Checks every strata invariant on an existing point; returns the first
/// violated one, if any.
inline std::optional<std::string> strata_invariant_failure(const CoefficientPoint& gamma, const Partition& mu,
                                                           const StratumReport& r) {
  const std::size_t n = gamma.degree();
  const MultiplicityPattern pattern = multiplicity_pattern(gamma);
  if (pattern.multiplicities != mu.parts()) return "sampled multiplicity pattern differs from partition";
  if (pattern.distinct_roots() != r.m_gcd) return "pattern size differs from gcd count";
  if (!r.consistent) return "classifiers disagree";
  if (r.ord_D != n - r.m_gcd) return "order of D differs from n - m";
  if (t_valuation_constant_shift(gamma) != r.ord_D) return "constant-shift t-valuation differs from order of D";
  if (r.on_hypersurface != (r.m_gcd <= n - 1)) return "hypersurface membership mismatch";
  const std::size_t first = first_nonvanishing_subdiscriminant(gamma);
  if (first != n - r.m_gcd) return "subdiscriminant chain breaks at the wrong index";
  if (r.on_hypersurface && r.hypersurface_singular != (r.m_gcd + 2 <= n))
    return "hypersurface singularity disagrees with root count";
  if (!coincident_locus_membership(pattern, mu)) return "point not in its own locus";
  for (const auto& finer : single_split_refinements(mu))
    if (!coincident_locus_membership(pattern, finer)) return "locus nesting fails for refinement " + finer.to_string();
  const Partition single_root(std::vector<unsigned>{static_cast<unsigned>(n)});
  if (coincident_locus_membership(pattern, single_root) != (pattern.distinct_roots() == 1))
    return "membership in the single-root locus mismatch";
  return std::nullopt;
}

/// One sample of C_mu with every check applied.
inline TrialResult run_trial(std::size_t n, const Partition& mu, std::uint64_t seed) {
  detail::require_verify_degree(n);
  if (mu.total() != n) throw std::invalid_argument("partition does not sum to n");
  TrialResult t;
  t.n = n;
  t.mu = mu;
  t.seed = seed;
  t.gamma = sample_coincident_locus(mu, seed);
  t.report = stratum_report(t.gamma);

  std::vector<std::string> problems;
  auto strata_failure = strata_invariant_failure(t.gamma, mu, t.report);
  t.invariants_ok = !strata_failure;
  if (strata_failure) problems.push_back(*strata_failure);

  t.rank_ok = check_rank_formula(t.gamma);
  if (!t.rank_ok) problems.emplace_back("rank formula violated");
  t.res_fact_ok = check_res_factorization(t.gamma);
  if (!t.res_fact_ok) problems.emplace_back("resultant factorization violated");
  t.appendix_ok = true;
  for (std::size_t s = 1; s < n; ++s) {
    if (!check_appendix_proposition(t.gamma, s)) {
      t.appendix_ok = false;
      problems.push_back("appendix valuation contract violated at s=" + std::to_string(s));
    }
  }
  if (!problems.empty()) {
    std::ostringstream out;
    out << "n=" << n << " mu=" << mu.to_string() << " seed=" << seed << " gamma=" << t.gamma.to_string() << ": ";
    for (std::size_t i = 0; i < problems.size(); ++i) out << (i ? "; " : "") << problems[i];
    t.failure_detail = out.str();
  }
  return t;
}

/// Every partition of n, trials_per_partition seeded samples each. Trials run
/// on `threads` workers; results are ordered by (partition, trial) index.
inline SuiteReport run_suite(std::size_t n, std::size_t trials_per_partition, std::uint64_t seed,
                             unsigned threads = 0) {
  detail::require_verify_degree(n);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Partition> parts = partitions_of(n);
  struct Job {
    std::size_t partition_index;
    std::size_t trial_index;
  };
  std::vector<Job> jobs;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t t = 0; t < trials_per_partition; ++t) jobs.push_back({p, t});

  // Warm the shared caches once before fanning out.
  for (std::size_t k = 0; k < n; ++k) (void)subdiscriminant(n, k);
  (void)discriminant_gradient(n);

  std::vector<std::optional<TrialResult>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto& job = jobs[i];
      results[i] = run_trial(n, parts[job.partition_index], trial_seed(seed, job.partition_index, job.trial_index));
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }

  SuiteReport report;
  report.n = n;
  report.trials_per_partition = trials_per_partition;
  report.seed = seed;
  report.trials = jobs.size();
  for (auto& r : results)
    if (r && !r->passed()) report.failures.push_back(std::move(*r));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace discstrat
