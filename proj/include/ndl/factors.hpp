#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ndl/bigint.hpp"
#include "ndl/graph.hpp"
#include "ndl/size_caps.hpp"

namespace ndl {

// A 2-factor in the single-edge-is-a-cycle convention: every component is
// either an edge (two vertices) or a cycle of length >= 3. Canonical form:
// components ordered by smallest vertex; a cycle starts at its smallest
// vertex and continues towards the smaller of that vertex's two neighbours;
// an edge component is listed as {u, v} with u < v.
struct TwoFactor {
  std::vector<std::vector<int>> components;

  // c(F): the number of components of length >= 3.
  int cycle_count() const;
  int component_count() const { return static_cast<int>(components.size()); }
  // Each undirected edge once, normalized and sorted.
  std::vector<Edge> edge_set() const;

  friend bool operator==(const TwoFactor&, const TwoFactor&) = default;
};

// Canonical rotation and direction of a cycle given as a vertex sequence.
std::vector<int> canonical_cycle(std::vector<int> cycle);
TwoFactor canonicalized(TwoFactor f);

// Throws Error(InvalidTwoFactor) unless f partitions V(g) into edge and
// cycle components whose consecutive pairs are edges of g.
void validate_two_factor(const Graph& g, const TwoFactor& f);

using TwoFactorVisitor = std::function<void(const TwoFactor&)>;

// Emits every 2-factor of g once, canonical, in lexicographic order of
// the component sequences. Throws Error(TooLarge) above the enumeration cap.
void enumerate_two_factors(const Graph& g, const TwoFactorVisitor& visit,
                           const SizeCaps& caps = SizeCaps::from_environment());
std::vector<TwoFactor> all_two_factors(const Graph& g,
                                       const SizeCaps& caps = SizeCaps::from_environment());

// Hamilton cycles of g in canonical form, lexicographic order (n <= 64, no cap:
// callers choose graphs small enough to enumerate).
void enumerate_hamilton_cycles(const Graph& g, const std::function<void(const std::vector<int>&)>& visit);

struct FactorHistogram {
  std::map<int, BigInt> counts;           // s -> f(G, s), nonzero entries only
  std::map<int, BigInt> weighted_counts;  // s -> sum over F with s components of 2^c(F)
  BigInt total;                           // f(G)
  BigInt weighted_total;                  // sum over F of 2^c(F)
};

// Subset dynamic programme over vertex sets (independent of the
// enumerator); n <= caps.two_factor_enumeration.
FactorHistogram factor_histogram(const Graph& g, const SizeCaps& caps = SizeCaps::from_environment());
BigInt weighted_cycle_cover_sum(const Graph& g, const SizeCaps& caps = SizeCaps::from_environment());

// f(G[mask]) for every mask in [0, 2^n); n <= caps.two_factor_enumeration.
std::vector<std::uint64_t> induced_two_factor_counts(const Graph& g,
                                                     const SizeCaps& caps = SizeCaps::from_environment());

// h(G) by a (subset, endpoint) dynamic programme over Hamilton paths from
// vertex 0, processed one subset size at a time. n <= caps.hamilton.
BigInt hamilton_count_exact(const Graph& g, const SizeCaps& caps = SizeCaps::from_environment());

// m(G): match the lowest uncovered vertex to each of its uncovered
// neighbours, memoized on the uncovered set. Throws Error(OddN | TooLarge).
BigInt perfect_matching_count(const Graph& g, const SizeCaps& caps = SizeCaps::from_environment());

struct PhiResult {
  BigInt value;
  VertexMask maximizer = 0;  // first k-subset (numeric order) attaining the max
};

// phi(G, k) = max over k-subsets V0 of f(G[V0]).
// Throws Error(KOutOfRange) unless 2 <= k <= n, Error(TooLarge) above caps.phi.
PhiResult phi_with_witness(const Graph& g, int k, const SizeCaps& caps = SizeCaps::from_environment());
BigInt phi(const Graph& g, int k, const SizeCaps& caps = SizeCaps::from_environment());

// Number of 2-factors F with |E(F) \ E(H)| <= k for a Hamilton cycle H of g,
// E(F) a multiset in which an edge component contributes its edge twice.
// Throws Error(NotAHamiltonCycle), Error(KOutOfRange) unless 0 <= k <= 3,
// Error(TooLarge) above caps.near_hamilton.
std::uint64_t two_factors_near_hamilton(const Graph& g, const TwoFactor& hamilton, int k,
                                        const SizeCaps& caps = SizeCaps::from_environment());

}  // namespace ndl
