#include <gtest/gtest.h>

#include <cmath>

#include "ndl/error.hpp"
#include "ndl/generators.hpp"
#include "ndl/hamiltonize.hpp"
#include "support.hpp"

namespace ndl {
namespace {

Graph complete(int n) { return generate(GraphFamilySpec::complete(n)); }

// Independent check that `cycle` is a Hamilton cycle of g.
bool is_hamilton_cycle(const Graph& g, const std::vector<int>& cycle) {
  if (static_cast<int>(cycle.size()) != g.n()) return false;
  VertexMask seen = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    seen |= bit(cycle[i]);
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return seen == full_mask(g.n());
}

TEST(PosaClose, AdjacentEndpointsCloseImmediately) {
  const Graph k4 = complete(4);
  const auto r = posa_close(k4, {0, 1, 2, 3}, 0, 5);
  EXPECT_EQ(r.outcome, PosaOutcome::Closed);
  EXPECT_EQ(r.rotations, 0);
  EXPECT_TRUE(r.trace.empty());
}

TEST(PosaClose, ShortPathExtends) {
  const Graph c5 = generate(GraphFamilySpec::cycle(5));
  const auto r = posa_close(c5, {0, 1}, 0, 3);
  EXPECT_EQ(r.outcome, PosaOutcome::Extendable);
  EXPECT_EQ(r.rotations, 0);
}

TEST(PosaClose, PetersenSpanningPathNeverCloses) {
  const Graph p = generate(GraphFamilySpec::petersen());
  // Every Hamilton path of Petersen: none can be rotated into a closable one.
  int paths = 0;
  std::vector<int> path;
  std::function<void(VertexMask)> walk = [&](VertexMask used) {
    if (popcount(used) == 10) {
      if (path.front() < path.back()) {
        ++paths;
        const auto r = posa_close(p, path, 0, 40);
        EXPECT_EQ(r.outcome, PosaOutcome::Failed);
      }
      return;
    }
    for_each_vertex(p.neighbors(path.back()) & ~used, [&](int x) {
      path.push_back(x);
      walk(used | bit(x));
      path.pop_back();
    });
  };
  for (int s = 0; s < 10; ++s) {
    path = {s};
    walk(bit(s));
  }
  EXPECT_GT(paths, 0);
}

TEST(PosaClose, RotationsAreRecordedInPairs) {
  // Path 0-1-2-3-4 in a graph where only rotation reaches a closing pair.
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 2}});
  const auto r = posa_close(g, {0, 1, 2, 3, 4}, 0, 4);
  ASSERT_EQ(r.outcome, PosaOutcome::Closed);
  EXPECT_EQ(r.trace.size(), 2u * static_cast<std::size_t>(r.rotations));
  EXPECT_LE(r.trace.size(), 8u);
  EXPECT_TRUE(g.adjacent(r.path.front(), r.path.back()));
  for (std::size_t i = 0; i + 1 < r.path.size(); ++i) EXPECT_TRUE(g.adjacent(r.path[i], r.path[i + 1]));
}

TEST(PosaClose, RejectsBadInput) {
  const Graph c5 = generate(GraphFamilySpec::cycle(5));
  try {
    posa_close(c5, {0, 2}, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidPath);
  }
  EXPECT_THROW(posa_close(c5, {0, 1, 0}, 0, 3), Error);
  EXPECT_THROW(posa_close(c5, {0, 1}, 0, 0), Error);
}

TEST(Budget, Formula) {
  const auto k4 = certify(complete(4));
  EXPECT_EQ(per_merge_budget(k4, 10), static_cast<std::size_t>(std::ceil(10 * std::log(4.0) / std::log(3.0))));
  auto degenerate = k4;
  degenerate.eigenvalue_ratio = 1.0;
  EXPECT_EQ(per_merge_budget(degenerate, 10), 4u);
}

TEST(Hamiltonize, SingleComponentNeedsNothing) {
  const Graph k5 = complete(5);
  const TwoFactor f{{{0, 2, 4, 1, 3}}};
  const auto t = two_factor_to_hamilton(k5, f, certify(k5));
  EXPECT_TRUE(t.success);
  EXPECT_EQ(t.replacements, 0u);
  EXPECT_TRUE(t.trace.empty());
  const auto r = replay(k5, f, t);
  ASSERT_TRUE(r.hamilton_cycle);
  EXPECT_EQ(*r.hamilton_cycle, t.hamilton_cycle);
}

TEST(Hamiltonize, TwoTrianglesInK6) {
  const Graph k6 = complete(6);
  const TwoFactor f{{{0, 1, 2}, {3, 4, 5}}};
  const auto t = two_factor_to_hamilton(k6, f, certify(k6));
  ASSERT_TRUE(t.success) << t.failure;
  EXPECT_LE(t.replacements, 4u);
  EXPECT_TRUE(is_hamilton_cycle(k6, t.hamilton_cycle));
  const auto r = replay(k6, f, t);
  ASSERT_TRUE(r.hamilton_cycle);
  EXPECT_EQ(*r.hamilton_cycle, t.hamilton_cycle);
}

TEST(Hamiltonize, PetersenAlwaysFails) {
  const Graph p = generate(GraphFamilySpec::petersen());
  const auto c = certify(p);
  const auto factors = all_two_factors(p);
  ASSERT_FALSE(factors.empty());
  for (const auto& f : factors) {
    const auto t = two_factor_to_hamilton(p, f, c, 10);
    EXPECT_FALSE(t.success);
    EXPECT_FALSE(t.failure.empty());
    EXPECT_FALSE(replay(p, f, t).hamilton_cycle);
  }
}

TEST(Hamiltonize, CorpusSoundnessAndBudget) {
  for (const auto& [name, g] : testing::corpus()) {
    if (g.n() > 10) continue;
    const auto c = certify(g);
    for (const auto& f : all_two_factors(g)) {
      const auto t = two_factor_to_hamilton(g, f, c, 10);
      EXPECT_EQ(t.replacements, t.trace.size());
      for (auto m : t.per_merge_replacements) EXPECT_LE(m, t.budget) << name;
      if (!t.success) continue;
      EXPECT_TRUE(is_hamilton_cycle(g, t.hamilton_cycle)) << name;
      EXPECT_LE(t.per_merge_replacements.size(), f.components.size()) << name;
      EXPECT_LE(t.replacements, f.components.size() * t.budget) << name;
      const auto r = replay(g, f, t);
      ASSERT_TRUE(r.hamilton_cycle) << name;
      EXPECT_EQ(*r.hamilton_cycle, t.hamilton_cycle);
    }
  }
}

TEST(Hamiltonize, Deterministic) {
  const Graph g = generate(GraphFamilySpec::random_regular(12, 4, 6));
  const auto c = certify(g);
  for (const auto& f : all_two_factors(g)) {
    const auto a = two_factor_to_hamilton(g, f, c);
    const auto b = two_factor_to_hamilton(g, f, c);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.hamilton_cycle, b.hamilton_cycle);
    break;
  }
}

TEST(Hamiltonize, DisconnectedAndInvalidInput) {
  const Graph two = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto t = two_factor_to_hamilton(two, TwoFactor{{{0, 1, 2}, {3, 4, 5}}}, certify(two));
  EXPECT_FALSE(t.success);
  EXPECT_EQ(t.failure, "disconnected");
  const Graph k4 = complete(4);
  try {
    two_factor_to_hamilton(k4, TwoFactor{{{0, 1, 2}}}, certify(k4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidTwoFactor);
  }
}

TEST(Hamiltonize, TinyBudgetFailsCleanly) {
  const Graph k6 = complete(6);
  const TwoFactor f{{{0, 1, 2}, {3, 4, 5}}};
  const auto t = two_factor_to_hamilton(k6, f, certify(k6), 0.01);
  EXPECT_EQ(t.budget, 1u);
  EXPECT_FALSE(t.success);
  EXPECT_EQ(t.failure, "budget-exhausted");
  EXPECT_NO_THROW(replay(k6, f, t));
  // Edge components merge with one insertion each, so budget 1 suffices.
  const Graph k8 = complete(8);
  const auto e = two_factor_to_hamilton(k8, TwoFactor{{{0, 1}, {2, 3}, {4, 5}, {6, 7}}}, certify(k8), 0.01);
  EXPECT_TRUE(e.success) << e.failure;
}

TEST(Replay, AuditsTraces) {
  const Graph c4 = generate(GraphFamilySpec::cycle(4));
  const TwoFactor f{{{0, 1}, {2, 3}}};
  RotationTrace bad;
  bad.trace = {{TraceRecord::Op::Insert, 0, 2}};
  bad.replacements = 1;
  try {
    replay(c4, f, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentTrace);
  }
  RotationTrace missing;
  missing.trace = {{TraceRecord::Op::Delete, 1, 2}};
  missing.replacements = 1;
  EXPECT_THROW(replay(c4, f, missing), Error);

  RotationTrace good;
  good.trace = {{TraceRecord::Op::Insert, 1, 2}, {TraceRecord::Op::Insert, 3, 0}};
  good.replacements = 2;
  good.success = true;
  good.hamilton_cycle = {0, 1, 2, 3};
  const auto r = replay(c4, f, good);
  ASSERT_TRUE(r.hamilton_cycle);
  EXPECT_EQ(*r.hamilton_cycle, (std::vector<int>{0, 1, 2, 3}));

  good.hamilton_cycle = {0, 3, 1, 2};
  EXPECT_THROW(replay(c4, f, good), Error);

  RotationTrace empty;
  const TwoFactor whole{{{0, 1, 2, 3}}};
  EXPECT_EQ(*replay(c4, whole, empty).hamilton_cycle, (std::vector<int>{0, 1, 2, 3}));
}

}  // namespace
}  // namespace ndl
