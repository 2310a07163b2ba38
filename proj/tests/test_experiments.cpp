#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "ndl/error.hpp"
#include "ndl/experiments.hpp"
#include "ndl/generators.hpp"
#include "ndl/mixing.hpp"
#include "ndl/rng.hpp"
#include "support.hpp"

namespace ndl {
namespace {

Graph complete(int n) { return generate(GraphFamilySpec::complete(n)); }

const InequalityCheck& find_check(const std::vector<InequalityCheck>& checks, const std::string& prefix) {
  for (const auto& c : checks)
    if (c.name.rfind(prefix, 0) == 0) return c;
  throw std::runtime_error("no check " + prefix);
}

TEST(BoundsReport, CompleteFour) {
  const auto r = bounds_report(complete(4));
  EXPECT_EQ(*r.exact.permanent, 9);
  EXPECT_EQ(*r.exact.h, 3);
  EXPECT_EQ(*r.exact.f_total, 6);
  EXPECT_EQ(*r.exact.m, 3);
  EXPECT_NEAR(std::exp(r.bounds.vdw_lower.value), 7.59375, 1e-9);
  EXPECT_NEAR(std::exp(r.bounds.bregman_upper.value), 10.903, 1e-3);
  EXPECT_NEAR(std::exp(r.bounds.regular_upper.value), 10.903, 1e-3);
  EXPECT_NEAR(r.bounds.theorem_estimate, std::log(7.59375), 1e-9);
  EXPECT_TRUE(r.all_asserted_hold());
  EXPECT_NEAR(*r.normalized.h_root, std::pow(3.0, 0.25), 1e-12);
  EXPECT_NEAR(r.normalized.d_over_e, 3 / std::exp(1.0), 1e-12);
}

TEST(BoundsReport, CompleteSix) {
  const auto r = bounds_report(complete(6));
  EXPECT_EQ(*r.exact.h, 60);
  EXPECT_EQ(*r.exact.permanent, 265);
  EXPECT_NEAR(std::exp(r.bounds.regular_upper.value), 312.62, 0.01);
  EXPECT_NEAR(std::exp(r.bounds.vdw_lower.value), 241.1, 0.1);
  EXPECT_TRUE(r.all_asserted_hold());
}

TEST(BoundsReport, PetersenConditionOneFails) {
  const auto r = bounds_report(generate(GraphFamilySpec::petersen()), 0.1);
  EXPECT_EQ(*r.exact.h, 0);
  EXPECT_NEAR(r.certificate.eigenvalue_ratio, 1.5, 1e-9);
  EXPECT_LT(r.certificate.cond1_margin, 1.0);
  EXPECT_TRUE(r.all_asserted_hold());
  EXPECT_FALSE(r.normalized.log_gap.has_value() && std::isfinite(*r.normalized.log_gap));
}

TEST(BoundsReport, CorpusChecksAllHold) {
  for (const auto& [name, g] : testing::corpus()) {
    const auto r = bounds_report(g);
    for (const auto& c : r.checks) {
      if (c.asserted) EXPECT_TRUE(c.holds) << name << ": " << c.name;
    }
    EXPECT_TRUE(r.exact.permanent && r.exact.h && r.exact.f_histogram) << name;
    if (g.n() % 2 == 0) {
      EXPECT_TRUE(r.exact.m.has_value());
      EXPECT_TRUE(r.bounds.alon_friedland_upper.has_value());
    }
  }
}

TEST(BoundsReport, CapsLeaveFieldsAbsent) {
  const auto r = bounds_report(generate(GraphFamilySpec::paley(13)), 0.1, 10.0, SizeCaps{}.lowered_to(12));
  EXPECT_FALSE(r.exact.permanent);
  EXPECT_FALSE(r.exact.h);
  EXPECT_FALSE(r.exact.f_histogram);
  EXPECT_TRUE(r.all_asserted_hold());
}

TEST(BoundsReport, RotationDistanceFormula) {
  const auto r = bounds_report(generate(GraphFamilySpec::paley(13)), 0.1, 10.0);
  ASSERT_TRUE(r.rotation_distance_k);
  const double s_star = 20.0 * 13 / std::pow(std::log(6.0), 2);
  EXPECT_NEAR(*r.rotation_distance_k, 10.0 * s_star * std::log(13.0) / std::log(r.certificate.eigenvalue_ratio), 1e-9);
  EXPECT_FALSE(bounds_report(generate(GraphFamilySpec::cycle(6))).rotation_distance_k.has_value());
}

TEST(BoundsReport, RejectsIrregular) {
  const Graph path = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  try {
    bounds_report(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRegular);
  }
}

TEST(Tail, CompleteFour) {
  const auto t = tail_diagnostics(complete(4));
  ASSERT_TRUE(t.s_star);
  EXPECT_NEAR(*t.s_star, 80 / std::pow(std::log(3.0), 2), 1e-9);
  EXPECT_NEAR(*t.s_star, 66.3, 0.05);
  EXPECT_TRUE(t.tail_empty);
  EXPECT_EQ(t.head_weight, 6);
  EXPECT_EQ(t.tail_weight, 0);
  EXPECT_FALSE(t.note.empty());
  EXPECT_NEAR(t.s1_of.at(2), 8 / std::log(3.0), 1e-12);
}

TEST(Tail, CycleSix) {
  const auto t = tail_diagnostics(generate(GraphFamilySpec::cycle(6)));
  EXPECT_NEAR(*t.s_star, 120 / std::pow(std::log(2.0), 2), 1e-9);
  EXPECT_NEAR(*t.s_star, 249.8, 0.1);
  EXPECT_TRUE(t.tail_empty);
  EXPECT_EQ(t.head_weight, 3);
}

TEST(Tail, PartitionIdentityOnCorpus) {
  for (const auto& [name, g] : testing::corpus()) {
    const auto t = tail_diagnostics(g);
    EXPECT_GE(t.tail_weight, 0);
    EXPECT_EQ(t.head_weighted + t.tail_weight, t.weighted_total) << name;
    EXPECT_EQ(t.weighted_total, weighted_cycle_cover_sum(g)) << name;
  }
}

TEST(PhiEstimate, CompleteFourRemoveOne) {
  const auto r = phi_estimate_report(complete(4), 1);
  EXPECT_EQ(r.e_removed, 0);
  EXPECT_NEAR(find_check(r.checks, "e(V0) <=").rhs, 1.375, 1e-9);
  EXPECT_NEAR(r.d1, 3 * 0.75 + 2.0 / 3.0, 1e-9);
  EXPECT_EQ(r.permanent_rest, 2);
  EXPECT_EQ(r.f_rest, 1);
  EXPECT_TRUE(r.all_asserted_hold());
}

TEST(PhiEstimate, CompleteSixRemoveTwo) {
  const auto r = phi_estimate_report(complete(6), 2);
  EXPECT_EQ(r.e_removed, 1);
  EXPECT_NEAR(find_check(r.checks, "e(V0) <=").rhs, 2.0 * 5.0 / 6.0 + 2.0, 1e-9);
  EXPECT_EQ(r.permanent_rest, 9);
  EXPECT_EQ(r.e_cross, 8);
  EXPECT_EQ(r.twice_e_rest, 12);
  EXPECT_TRUE(r.all_asserted_hold());
}

TEST(PhiEstimate, LargestTLeavesAnEdgeOrNothing) {
  for (const auto& [name, g] : testing::corpus()) {
    if (g.n() > 14) continue;
    const auto r = phi_estimate_report(g, g.n() - 2);
    EXPECT_TRUE(r.permanent_rest == 0 || r.permanent_rest == 1) << name;
    EXPECT_EQ(popcount(r.removed), g.n() - 2);
  }
}

TEST(PhiEstimate, CorpusChecksHoldForEveryT) {
  for (const auto& [name, g] : testing::corpus()) {
    if (g.n() > 12) continue;
    for (int t = 1; t <= g.n() - 2; ++t) {
      const auto r = phi_estimate_report(g, t);
      for (const auto& c : r.checks) {
        if (c.asserted) EXPECT_TRUE(c.holds) << name << " t=" << t << ": " << c.name << " " << c.lhs << " " << c.rhs;
      }
      const VertexMask rest = full_mask(g.n()) & ~r.removed;
      EXPECT_EQ(r.e_removed, edge_count(g, r.removed, r.removed) / 2);
      EXPECT_EQ(r.f_rest, phi(g, g.n() - t));
      EXPECT_EQ(r.twice_e_rest, edge_count(g, rest, rest));
    }
  }
}

TEST(PhiEstimate, Errors) {
  EXPECT_THROW(phi_estimate_report(complete(4), 0), Error);
  EXPECT_THROW(phi_estimate_report(complete(4), 3), Error);
  try {
    phi_estimate_report(complete(15), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Janson, GnpValues) {
  EXPECT_NEAR(janson_expectation_gnp(4, 1.0).value(), 3.0, 1e-9);
  EXPECT_NEAR(janson_expectation_gnp(5, 0.5).value(), 0.375, 1e-12);
  EXPECT_NEAR(janson_expectation_gnp(3, 1.0).value(), 1.0, 1e-12);
  EXPECT_TRUE(janson_expectation_gnp(5, 0.0).zero);
  EXPECT_EQ(janson_expectation_gnp(5, 0.0).value(), 0.0);
  for (int n = 3; n <= 12; ++n) {
    EXPECT_NEAR(janson_expectation_gnp(n, 1.0).log_value, log_of(hamilton_count_exact(complete(n))), 1e-9);
  }
  EXPECT_THROW(janson_expectation_gnp(2, 0.5), Error);
  EXPECT_THROW(janson_expectation_gnp(5, 1.5), Error);
}

TEST(Janson, GnmValues) {
  EXPECT_NEAR(janson_expectation_gnm(4, 6).value(), 3.0, 1e-9);
  EXPECT_NEAR(janson_expectation_gnm(5, 5).value(), 12.0 / 252.0, 1e-12);
  EXPECT_TRUE(janson_expectation_gnm(5, 4).zero);
  try {
    janson_expectation_gnm(5, 11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MOutOfRange);
  }
}

TEST(Janson, GnmMatchesExhaustiveAverage) {
  // Average h over every 6-edge graph on 5 vertices.
  const int n = 5;
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  for (int m : {5, 6, 8}) {
    double sum = 0;
    int graphs = 0;
    for (unsigned sel = 0; sel < (1u << pairs.size()); ++sel) {
      if (std::popcount(sel) != m) continue;
      std::vector<Edge> es;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (sel >> i & 1u) es.push_back(pairs[i]);
      sum += hamilton_count_exact(Graph::from_edges(n, es)).convert_to<double>();
      ++graphs;
    }
    EXPECT_NEAR(janson_expectation_gnm(n, m).value(), sum / graphs, 1e-9) << m;
  }
}

TEST(MonteCarlo, DegenerateCases) {
  const auto full = monte_carlo_gnp(4, 1.0, 7, 3);
  EXPECT_EQ(full.empirical_mean, 3.0);
  EXPECT_NEAR(*full.ratio, 1.0, 1e-12);
  const auto empty = monte_carlo_gnp(5, 0.0, 5, 3);
  EXPECT_EQ(empty.empirical_mean, 0.0);
  EXPECT_EQ(empty.expectation, 0.0);
  EXPECT_FALSE(empty.ratio);
  EXPECT_THROW(monte_carlo_gnp(15, 0.5, 1, 0), Error);
  EXPECT_THROW(monte_carlo_gnp(6, 0.5, 0, 0), Error);
}

TEST(MonteCarlo, DeterministicPerSeed) {
  const auto a = monte_carlo_gnp(7, 0.5, 50, 9);
  const auto b = monte_carlo_gnp(7, 0.5, 50, 9);
  EXPECT_EQ(a.empirical_mean, b.empirical_mean);
  EXPECT_EQ(a.sample_stddev, b.sample_stddev);
  EXPECT_EQ(sample_gnp(9, 0.3, 17), sample_gnp(9, 0.3, 17));
}

TEST(MonteCarlo, GrandMeanWithinThreeSigma) {
  // 20 seeds x 200 trials; the standard error comes from the pooled sample.
  double sum = 0, sum_sq = 0;
  int count = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int i = 0; i < 200; ++i) {
      const double h = hamilton_count_exact(sample_gnp(7, 0.5, derive_seed(seed + 1000, static_cast<std::uint64_t>(i))))
                           .convert_to<double>();
      sum += h;
      sum_sq += h * h;
      ++count;
    }
  }
  const double mean = sum / count;
  const double var = (sum_sq - count * mean * mean) / (count - 1);
  const double expected = janson_expectation_gnp(7, 0.5).value();
  EXPECT_LE(std::abs(mean - expected), 3 * std::sqrt(var / count));
}

TEST(Trend, RowsAreConsistent) {
  const auto rows = hamilton_trend(10, 12, {4}, 0);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    const Graph g = generate(GraphFamilySpec::random_regular(r.n, r.d, r.seed));
    EXPECT_EQ(r.h, hamilton_count_exact(g));
    EXPECT_NEAR(r.theorem_estimate, log_factorial(r.n) + r.n * std::log(r.d / static_cast<double>(r.n)), 1e-12);
    EXPECT_NEAR(r.log_gap, (r.log_h - r.theorem_estimate) / r.n, 1e-12);
  }
  // Odd n*d rows are skipped.
  EXPECT_EQ(hamilton_trend(9, 11, {3}, 0).size(), 1u);
}

}  // namespace
}  // namespace ndl
