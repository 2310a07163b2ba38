#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ndl/generators.hpp"
#include "ndl/rng.hpp"

namespace ndl::testing {

const std::vector<NamedGraph>& corpus() {
  static const std::vector<NamedGraph> graphs = [] {
    std::vector<NamedGraph> out;
    for (int n = 3; n <= 8; ++n) out.push_back({"K" + std::to_string(n), generate(GraphFamilySpec::complete(n))});
    for (int n = 4; n <= 10; ++n) out.push_back({"C" + std::to_string(n), generate(GraphFamilySpec::cycle(n))});
    out.push_back({"petersen", generate(GraphFamilySpec::petersen())});
    out.push_back({"paley5", generate(GraphFamilySpec::paley(5))});
    out.push_back({"paley13", generate(GraphFamilySpec::paley(13))});
    const int ns[] = {8, 10, 12, 14};
    const int ds[] = {3, 4, 6};
    for (int i = 0; i < 20; ++i) {
      const int n = ns[i % 4];
      const int d = ds[i % 3];
      const auto seed = static_cast<std::uint64_t>(i + 1);
      out.push_back({"rr" + std::to_string(n) + "_" + std::to_string(d) + "_s" + std::to_string(seed),
                     generate(GraphFamilySpec::random_regular(n, d, seed))});
    }
    return out;
  }();
  return graphs;
}

BigInt brute_permanent(const ZeroOneMatrix& m) {
  const int n = m.n();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  BigInt count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = m.at(i, sigma[static_cast<std::size_t>(i)]);
    if (ok) ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

namespace {

std::vector<int> orient(std::vector<int> cycle) {
  const auto start = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), start, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> brute_two_factors(const Graph& g) {
  const int n = g.n();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<std::vector<std::vector<int>>> seen;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.adjacent(i, sigma[static_cast<std::size_t>(i)]);
    if (!ok) continue;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> comps;
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      std::vector<int> cycle;
      for (int v = i; !used[static_cast<std::size_t>(v)]; v = sigma[static_cast<std::size_t>(v)]) {
        used[static_cast<std::size_t>(v)] = true;
        cycle.push_back(v);
      }
      comps.push_back(orient(cycle));
    }
    std::sort(comps.begin(), comps.end());
    seen.insert(comps);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return {seen.begin(), seen.end()};
}

std::uint64_t brute_hamilton(const Graph& g) {
  const int n = g.n();
  if (n < 3) return 0;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::uint64_t count = 0;
  do {
    if (rest.front() > rest.back()) continue;
    bool ok = g.adjacent(0, rest.front()) && g.adjacent(rest.back(), 0);
    for (std::size_t i = 0; i + 1 < rest.size() && ok; ++i) ok = g.adjacent(rest[i], rest[i + 1]);
    if (ok) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

std::uint64_t brute_matchings(const Graph& g) {
  const int n = g.n();
  if (n % 2 != 0) return 0;
  const std::vector<Edge> edges = g.edges();
  const std::size_t k = static_cast<std::size_t>(n / 2);
  if (edges.size() < k) return k == 0 ? 1 : 0;
  std::vector<bool> pick(edges.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::uint64_t count = 0;
  do {
    VertexMask covered = 0;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!pick[i]) continue;
      const VertexMask e = bit(edges[i].u) | bit(edges[i].v);
      ok = (covered & e) == 0;
      covered |= e;
    }
    if (ok) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < p) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  rng.shuffle(perm.begin(), perm.end());
  return perm;
}

}  // namespace ndl::testing
