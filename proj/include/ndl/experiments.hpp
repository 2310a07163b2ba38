#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ndl/bigint.hpp"
#include "ndl/factors.hpp"
#include "ndl/graph.hpp"
#include "ndl/permanent.hpp"
#include "ndl/size_caps.hpp"
#include "ndl/spectral.hpp"

namespace ndl {

// One asserted or reported inequality `lhs <= rhs` (or `lhs >= rhs` when
// `greater` is set). Values are natural logs when `log_domain` is set.
struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool log_domain = false;
  bool greater = false;
  bool asserted = true;  // false: reported only (asymptotic form)
  bool holds = true;
};

struct ExactCounts {
  std::optional<BigInt> permanent;
  std::optional<BigInt> h;
  std::optional<BigInt> f_total;
  std::optional<FactorHistogram> f_histogram;
  std::optional<BigInt> m;
};

struct LogBounds {
  LogBound vdw_lower;
  LogBound vdw_lower_weak;
  LogBound bregman_upper;
  LogBound regular_upper;
  std::optional<LogBound> alon_friedland_upper;
  double theorem_estimate = 0.0;  // log(n!) + n log(d/n)
};

struct NormalizedRoots {
  std::optional<double> h_root;          // h^(1/n)
  std::optional<double> permanent_root;  // per(A)^(1/n)
  double d_over_e = 0.0;
  double theorem_root = 0.0;             // (n! (d/n)^n)^(1/n)
  std::optional<double> log_gap;         // (log h - theorem_estimate) / n
};

struct BoundsReport {
  int n = 0;
  int d = 0;
  double lambda = 0.0;
  NdlCertificate certificate;
  ExactCounts exact;
  LogBounds bounds;
  NormalizedRoots normalized;
  double rotation_budget_constant = 10.0;
  // k = budget_constant * s* * log n / log(d/lambda), the rotation distance
  // used by the lower-bound argument; absent when d/lambda <= 1 or d <= 1.
  std::optional<double> rotation_distance_k;
  std::vector<InequalityCheck> checks;

  bool all_asserted_hold() const;
};

// Throws Error(NotRegular). Exact values are filled only within caps.
BoundsReport bounds_report(const Graph& g, double epsilon = 0.1, double budget_constant = 10.0,
                           const SizeCaps& caps = SizeCaps::from_environment());

struct TailDiagnostics {
  int n = 0;
  int d = 0;
  std::optional<double> s_star;      // 20 n / (log d)^2; absent when d <= 1
  std::map<int, double> s1_of;       // s -> 4 s / log d for every s in the histogram
  BigInt head_weight;                // sum_{s <= s*} f(G,s)
  BigInt head_weighted;              // sum_{s <= s*} weighted_counts[s]
  BigInt tail_weight;                // sum_{s > s*} weighted_counts[s]
  BigInt tail_power_sum;             // sum_{s > s*} f(G,s) 2^s
  BigInt weighted_total;
  double log_tail_over_d_over_e_n = 0.0;  // log(tail_power_sum) - n log(d/e); -inf when empty
  bool tail_empty = true;
  std::string note;
};

TailDiagnostics tail_diagnostics(const Graph& g, const SizeCaps& caps = SizeCaps::from_environment());

struct PhiEstimateReport {
  int n = 0;
  int d = 0;
  int t = 0;
  double lambda = 0.0;
  VertexMask removed = 0;           // V0, |V0| = t, maximizing f(G[V - V0])
  std::int64_t e_removed = 0;       // e(V0)
  std::int64_t e_cross = 0;         // e(V0, V - V0)
  std::int64_t twice_e_rest = 0;    // 2 e(V - V0)
  double average_degree_rest = 0.0;
  double d1 = 0.0;                  // d (1 - t/n) + 2 lambda t / (n - t)
  BigInt f_rest;                    // f(G[V - V0]) = phi(G, n - t)
  BigInt permanent_rest;            // per(A1)
  std::vector<InequalityCheck> checks;

  bool all_asserted_hold() const;
};

// Throws Error(KOutOfRange) unless 1 <= t <= n-2, Error(TooLarge) above caps.phi.
PhiEstimateReport phi_estimate_report(const Graph& g, int t, double epsilon = 0.1,
                                      const SizeCaps& caps = SizeCaps::from_environment());

// A log-domain expectation; `zero` marks an expectation of exactly 0.
struct LogExpectation {
  double log_value = 0.0;
  bool zero = false;

  double value() const;
};

// log((n-1)!/2) + n log p. Requires n >= 3 and 0 <= p <= 1 (p = 0 gives zero).
LogExpectation janson_expectation_gnp(int n, double p);
// ((n-1)!/2) C(N-n, m-n) / C(N, m) with N = C(n,2). m < n gives zero;
// m > N throws Error(MOutOfRange).
LogExpectation janson_expectation_gnm(int n, long long m);

struct MonteCarloResult {
  int n = 0;
  double p = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  double empirical_mean = 0.0;
  double sample_stddev = 0.0;
  double expectation = 0.0;
  std::optional<double> ratio;  // empirical_mean / expectation when expectation > 0
};

// Trial i draws G(n, p) from an RNG seeded by derive_seed(seed, i) and counts
// Hamilton cycles exactly. Throws Error(TooLarge) above caps.monte_carlo.
MonteCarloResult monte_carlo_gnp(int n, double p, int trials, std::uint64_t seed,
                                 const SizeCaps& caps = SizeCaps::from_environment());

// Draw of G(n, p) from the given RNG stream.
Graph sample_gnp(int n, double p, std::uint64_t stream_seed);

struct TrendRow {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  double lambda = 0.0;
  BigInt h;
  double log_h = 0.0;
  double theorem_estimate = 0.0;
  double log_gap = 0.0;  // (log h - theorem_estimate) / n = log(h^(1/n) / (n!(d/n)^n)^(1/n))
};

// h(G)^(1/n) against (n!(d/n)^n)^(1/n) on random regular graphs.
std::vector<TrendRow> hamilton_trend(int n_min, int n_max, const std::vector<int>& degrees, std::uint64_t seed,
                                     const SizeCaps& caps = SizeCaps::from_environment());

}  // namespace ndl
