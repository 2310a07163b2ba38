#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ndl/bigint.hpp"
#include "ndl/factors.hpp"
#include "ndl/graph.hpp"
#include "ndl/permanent.hpp"

namespace ndl::testing {

struct NamedGraph {
  std::string name;
  Graph g;
};

// K3..K8, C4..C10, Petersen, paley(5), paley(13) and 20 random regular
// graphs with n = 8,10,12,14 and d = 3,4,6 cycling, seeds 1..20.
const std::vector<NamedGraph>& corpus();

// Oracles below enumerate permutations or edge subsets directly and share no
// code with the library's counters.

// Number of permutations sigma with m[i][sigma(i)] = 1 for all i.
BigInt brute_permanent(const ZeroOneMatrix& m);

// Distinct cycle covers of the adjacency matrix with cycle orientation
// forgotten, each encoded canonically and returned in sorted order.
std::vector<std::vector<std::vector<int>>> brute_two_factors(const Graph& g);

// Hamilton cycles through vertex sequences starting at 0.
std::uint64_t brute_hamilton(const Graph& g);

// Edge subsets of size n/2 covering every vertex.
std::uint64_t brute_matchings(const Graph& g);

Graph random_graph(int n, double p, std::uint64_t seed);
std::vector<int> random_permutation(int n, std::uint64_t seed);

}  // namespace ndl::testing
