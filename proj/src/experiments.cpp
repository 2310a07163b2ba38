#include "ndl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ndl/error.hpp"
#include "ndl/generators.hpp"
#include "ndl/mixing.hpp"
#include "ndl/rng.hpp"

namespace ndl {
namespace {

// Slack on log-domain comparisons between exact counts and real bounds.
constexpr double kLogSlack = 1e-9;
// Slack on the edge-count inequalities, whose right-hand sides involve lambda.
constexpr double kRealSlack = 1e-9;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

InequalityCheck at_most(std::string name, double lhs, double rhs, bool log_domain, bool asserted = true) {
  const double slack = log_domain ? kLogSlack : kRealSlack;
  return {std::move(name), lhs, rhs, log_domain, false, asserted, lhs <= rhs + slack};
}

InequalityCheck at_least(std::string name, double lhs, double rhs, bool log_domain, bool asserted = true) {
  const double slack = log_domain ? kLogSlack : kRealSlack;
  return {std::move(name), lhs, rhs, log_domain, true, asserted, lhs + slack >= rhs};
}

// Exact comparison of two integers, recorded on the log scale.
InequalityCheck exact_at_most(std::string name, const BigInt& lhs, const BigInt& rhs) {
  return {std::move(name), log_of(lhs), log_of(rhs), true, false, true, lhs <= rhs};
}

BigInt choose_two(const BigInt& m) { return m * (m - 1) / 2; }

bool all_hold(const std::vector<InequalityCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return !c.asserted || c.holds; });
}

int require_regular(const Graph& g) {
  const auto d = g.regular_degree();
  if (!d) throw Error(ErrorKind::NotRegular, "degree sequence is not constant");
  return *d;
}

}  // namespace

bool BoundsReport::all_asserted_hold() const { return all_hold(checks); }
bool PhiEstimateReport::all_asserted_hold() const { return all_hold(checks); }

BoundsReport bounds_report(const Graph& g, double epsilon, double budget_constant, const SizeCaps& caps) {
  BoundsReport r;
  r.certificate = certify(g, epsilon);
  r.n = r.certificate.n;
  r.d = r.certificate.d;
  r.lambda = r.certificate.lambda;
  r.rotation_budget_constant = budget_constant;
  if (r.d < 1) throw Error(ErrorKind::InvalidParameters, "bounds need degree >= 1");
  const int n = r.n;
  const int d = r.d;

  const auto adjacency = ZeroOneMatrix::adjacency(g);
  if (n <= caps.permanent) r.exact.permanent = permanent_exact(adjacency, 1, caps);
  if (n <= caps.hamilton) r.exact.h = hamilton_count_exact(g, caps);
  if (n <= caps.two_factor_enumeration) {
    r.exact.f_histogram = factor_histogram(g, caps);
    r.exact.f_total = r.exact.f_histogram->total;
  }
  if (n % 2 == 0 && n <= caps.matching) r.exact.m = perfect_matching_count(g, caps);

  r.bounds.vdw_lower = vdw_lower(n, d);
  r.bounds.vdw_lower_weak = vdw_lower_weak(n, d);
  r.bounds.bregman_upper = bregman_bound(adjacency.row_sums());
  r.bounds.regular_upper = regular_upper(n, d);
  if (n % 2 == 0) r.bounds.alon_friedland_upper = alon_friedland_upper(n, d);
  r.bounds.theorem_estimate = log_factorial(n) + n * std::log(static_cast<double>(d) / n);

  auto& checks = r.checks;
  checks.push_back(at_most("(d/e)^n <= n!(d/n)^n", r.bounds.vdw_lower_weak.value, r.bounds.vdw_lower.value, true));
  if (r.exact.permanent) {
    const double log_per = log_of(*r.exact.permanent);
    checks.push_back(at_most("n!(d/n)^n <= per(A)", r.bounds.vdw_lower.value, log_per, true));
    checks.push_back(at_most("per(A) <= prod (r_i!)^(1/r_i)", log_per, r.bounds.bregman_upper.value, true));
    checks.push_back(at_most("per(A) <= (d!)^(n/d)", log_per, r.bounds.regular_upper.value, true));
  }
  if (r.exact.f_histogram && r.exact.permanent) {
    InequalityCheck identity{"per(A) == sum_F 2^c(F)", log_of(*r.exact.permanent),
                             log_of(r.exact.f_histogram->weighted_total), true, false, true,
                             *r.exact.permanent == r.exact.f_histogram->weighted_total};
    checks.push_back(identity);
    checks.push_back(exact_at_most("f(G) <= per(A)", *r.exact.f_total, *r.exact.permanent));
  }
  if (r.exact.h) {
    const double log_h = log_of(*r.exact.h);
    checks.push_back(at_most("h(G) <= (d!)^(n/d)", log_h, r.bounds.regular_upper.value, true));
    if (r.exact.f_total) checks.push_back(exact_at_most("h(G) <= f(G)", *r.exact.h, *r.exact.f_total));
    if (r.exact.m) checks.push_back(exact_at_most("h(G) <= C(m(G), 2)", *r.exact.h, choose_two(*r.exact.m)));
    // d! <= d (d/e)^d only for d >= 7, so this form is reported, not asserted.
    checks.push_back(at_most("h(G) <= (d/e)^n d^(n/d)", log_h,
                             n * (std::log(static_cast<double>(d)) - 1.0) + static_cast<double>(n) / d * std::log(static_cast<double>(d)),
                             true, false));
  }
  if (r.exact.m && r.bounds.alon_friedland_upper) {
    checks.push_back(at_most("m(G) <= (d!)^(n/2d)", log_of(*r.exact.m), r.bounds.alon_friedland_upper->value, true));
  }

  r.normalized.d_over_e = static_cast<double>(d) / std::exp(1.0);
  r.normalized.theorem_root = std::exp(r.bounds.theorem_estimate / n);
  if (r.exact.h) {
    const double log_h = log_of(*r.exact.h);
    r.normalized.h_root = std::exp(log_h / n);
    r.normalized.log_gap = (log_h - r.bounds.theorem_estimate) / n;
  }
  if (r.exact.permanent) r.normalized.permanent_root = std::exp(log_of(*r.exact.permanent) / n);

  if (d >= 2 && r.certificate.eigenvalue_ratio > 1.0 && std::isfinite(r.certificate.eigenvalue_ratio)) {
    const double s_star = 20.0 * n / std::pow(std::log(static_cast<double>(d)), 2);
    r.rotation_distance_k = budget_constant * s_star * std::log(static_cast<double>(n)) /
                            std::log(r.certificate.eigenvalue_ratio);
  }
  return r;
}

TailDiagnostics tail_diagnostics(const Graph& g, const SizeCaps& caps) {
  TailDiagnostics t;
  t.n = g.n();
  t.d = require_regular(g);
  const FactorHistogram hist = factor_histogram(g, caps);
  t.weighted_total = hist.weighted_total;

  const double log_d = std::log(static_cast<double>(t.d));
  if (t.d >= 2) t.s_star = 20.0 * t.n / (log_d * log_d);
  for (const auto& [s, count] : hist.counts) {
    if (t.d >= 2) t.s1_of[s] = 4.0 * s / log_d;
    const bool in_tail = t.s_star && s > *t.s_star;
    if (in_tail) {
      t.tail_weight += hist.weighted_counts.at(s);
      t.tail_power_sum += count * (BigInt(1) << s);
      t.tail_empty = false;
    } else {
      t.head_weight += count;
      t.head_weighted += hist.weighted_counts.at(s);
    }
  }
  t.log_tail_over_d_over_e_n =
      t.tail_empty || t.d < 1 ? kNegInf : log_of(t.tail_power_sum) - t.n * (log_d - 1.0);

  std::ostringstream note;
  if (!t.s_star) {
    note << "degree " << t.d << " makes s* undefined (log d = " << log_d << "); every 2-factor is counted in the head";
  } else if (t.tail_empty) {
    note << "s* = " << *t.s_star << " is not below the largest component count " << (hist.counts.empty() ? 0 : hist.counts.rbegin()->first)
         << "; the tail is empty at this size";
  } else {
    note << "tail holds 2-factors with more than s* = " << *t.s_star << " components";
  }
  t.note = note.str();
  return t;
}

PhiEstimateReport phi_estimate_report(const Graph& g, int t, double epsilon, const SizeCaps& caps) {
  const int n = g.n();
  if (t < 1 || t > n - 2) throw Error(ErrorKind::KOutOfRange, "phi estimate needs 1 <= t <= n-2");
  if (n > caps.phi) throw Error(ErrorKind::TooLarge, "phi estimate capped at n=" + std::to_string(caps.phi));
  const NdlCertificate cert = certify(g, epsilon);

  PhiEstimateReport r;
  r.n = n;
  r.d = cert.d;
  r.t = t;
  r.lambda = cert.lambda;
  const PhiResult best = phi_with_witness(g, n - t, caps);
  const VertexMask rest = best.maximizer;
  r.removed = full_mask(n) & ~rest;
  r.f_rest = best.value;

  r.e_removed = edge_count(g, r.removed, r.removed) / 2;
  r.e_cross = edge_count(g, r.removed, rest);
  r.twice_e_rest = edge_count(g, rest, rest);
  const double nn = n;
  const double tt = t;
  const double d = cert.d;
  const double lambda = cert.lambda;
  r.average_degree_rest = static_cast<double>(r.twice_e_rest) / (nn - tt);
  r.d1 = d * (1.0 - tt / nn) + 2.0 * lambda * tt / (nn - tt);

  const Graph induced = g.induced(rest);
  const auto a1 = ZeroOneMatrix::adjacency(induced);
  r.permanent_rest = permanent_exact(a1, 1, caps);
  const double log_per = log_of(r.permanent_rest);

  auto& checks = r.checks;
  checks.push_back(at_most("e(V0) <= (t^2/2)(d/n) + lambda t", static_cast<double>(r.e_removed),
                           tt * tt / 2.0 * d / nn + lambda * tt, false));
  checks.push_back(at_least("e(V0, V-V0) >= dt - dt^2/n - 2 lambda t", static_cast<double>(r.e_cross),
                            d * tt - d * tt * tt / nn - 2.0 * lambda * tt, false));
  checks.push_back(at_most("2e(V-V0) <= d(n-t) - dt + dt^2/n + 2 lambda t", static_cast<double>(r.twice_e_rest),
                           d * (nn - tt) - d * tt + d * tt * tt / nn + 2.0 * lambda * tt, false));
  checks.push_back(at_most("average degree of G[V-V0] <= d1", r.average_degree_rest, r.d1, false));
  checks.push_back(exact_at_most("f(G[V-V0]) <= per(A1)", r.f_rest, r.permanent_rest));
  checks.push_back(at_most("per(A1) <= prod (r_i!)^(1/r_i)", log_per, bregman_bound(a1.row_sums()).value, true));
  checks.push_back(at_most("per(A1) <= Bregman bound, equal split of 2e(V-V0)", log_per,
                           bregman_bound_equal_split(r.twice_e_rest, n - t).value, true));

  const double floor_d1 = std::floor(r.d1);
  const double ceil_d1 = std::ceil(r.d1);
  if (floor_d1 >= 1.0) {
    checks.push_back(at_most("per(A1) <= (ceil(d1)!)^((n-t)/floor(d1))", log_per,
                             log_factorial(ceil_d1) * (nn - tt) / floor_d1, true));
    checks.push_back(at_most("per(A1) <= ((d1/e)^d1 d1)^((n-t)/floor(d1))", log_per,
                             (r.d1 * (std::log(r.d1) - 1.0) + std::log(r.d1)) * (nn - tt) / floor_d1, true, false));
  }
  if (d >= 1.0 && r.d1 > 0.0) {
    const double spread = 5.0 * nn * std::log(d) / d;
    checks.push_back(at_most("per(A1) <= (d1/e)^(n-t) e^(5n log d/d)", log_per,
                             (nn - tt) * (std::log(r.d1) - 1.0) + spread, true, false));
    checks.push_back(at_most("per(A1) <= d^(n-t)/e^n exp(t^2/n + 4 lambda t/d + 5n log d/d)", log_per,
                             (nn - tt) * std::log(d) - nn + tt * tt / nn + 4.0 * lambda * tt / d + spread, true, false));
  }
  return r;
}

double LogExpectation::value() const { return zero ? 0.0 : std::exp(log_value); }

LogExpectation janson_expectation_gnp(int n, double p) {
  if (n < 3) throw Error(ErrorKind::InvalidParameters, "G(n,p) expectation needs n >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidParameters, "p must lie in [0, 1]");
  if (p == 0.0) return {kNegInf, true};
  return {log_factorial(n - 1) - std::log(2.0) + n * std::log(p), false};
}

LogExpectation janson_expectation_gnm(int n, long long m) {
  if (n < 3) throw Error(ErrorKind::InvalidParameters, "G(n,m) expectation needs n >= 3");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) {
    throw Error(ErrorKind::MOutOfRange, "m must lie in [0, " + std::to_string(pairs) + "]");
  }
  if (m < n) return {kNegInf, true};
  const double total = static_cast<double>(pairs);
  return {log_factorial(n - 1) - std::log(2.0) + log_binomial(total - n, static_cast<double>(m - n)) -
              log_binomial(total, static_cast<double>(m)),
          false};
}

Graph sample_gnp(int n, double p, std::uint64_t stream_seed) {
  Rng rng(stream_seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < p) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

MonteCarloResult monte_carlo_gnp(int n, double p, int trials, std::uint64_t seed, const SizeCaps& caps) {
  if (n > caps.monte_carlo) {
    throw Error(ErrorKind::TooLarge, "Monte Carlo capped at n=" + std::to_string(caps.monte_carlo));
  }
  if (trials < 1) throw Error(ErrorKind::InvalidParameters, "trials must be >= 1");
  MonteCarloResult r;
  r.n = n;
  r.p = p;
  r.trials = trials;
  r.seed = seed;
  const LogExpectation e = janson_expectation_gnp(n, p);
  r.expectation = e.value();

  // Welford accumulation in trial order.
  double mean = 0.0;
  double m2 = 0.0;
  for (int i = 0; i < trials; ++i) {
    const Graph g = sample_gnp(n, p, derive_seed(seed, static_cast<std::uint64_t>(i)));
    const double h = hamilton_count_exact(g, caps).convert_to<double>();
    const double delta = h - mean;
    mean += delta / (i + 1);
    m2 += delta * (h - mean);
  }
  r.empirical_mean = mean;
  r.sample_stddev = trials > 1 ? std::sqrt(m2 / (trials - 1)) : 0.0;
  if (r.expectation > 0.0) r.ratio = r.empirical_mean / r.expectation;
  return r;
}

std::vector<TrendRow> hamilton_trend(int n_min, int n_max, const std::vector<int>& degrees, std::uint64_t seed,
                                     const SizeCaps& caps) {
  std::vector<TrendRow> rows;
  for (int d : degrees) {
    for (int n = n_min; n <= n_max; ++n) {
      if ((n * d) % 2 != 0 || d >= n) continue;
      TrendRow row;
      row.n = n;
      row.d = d;
      row.seed = derive_seed(seed, static_cast<std::uint64_t>(n) * 1000U + static_cast<std::uint64_t>(d));
      const Graph g = generate(GraphFamilySpec::random_regular(n, d, row.seed));
      row.lambda = certify(g).lambda;
      row.h = hamilton_count_exact(g, caps);
      row.log_h = log_of(row.h);
      row.theorem_estimate = log_factorial(n) + n * std::log(static_cast<double>(d) / n);
      row.log_gap = (row.log_h - row.theorem_estimate) / n;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace ndl
