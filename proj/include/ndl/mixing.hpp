#pragma once

#include <cstdint>
#include <utility>

#include "ndl/graph.hpp"
#include "ndl/spectral.hpp"

namespace ndl {

// Number of (s, t) pairs with s in S, t in T and st an edge. Edges inside
// S ∩ T are counted twice, so edge_count(g, U, U) = 2 e(U).
std::int64_t edge_count(const Graph& g, VertexMask s, VertexMask t);

struct MixingDefect {
  std::int64_t edges = 0;
  double defect = 0.0;  // |e(S,T) - (d/n)|S||T||
  double bound = 0.0;   // lambda * sqrt(|S||T|)
};

// Throws Error(EmptySet) when S or T is empty.
MixingDefect mixing_defect(const Graph& g, const NdlCertificate& cert, VertexMask s, VertexMask t);

struct MixingReport {
  std::int64_t pairs_checked = 0;
  double max_normalized_defect = 0.0;
  std::pair<VertexMask, VertexMask> worst_pair{0, 0};
  std::int64_t violations = 0;
};

// Checks every singleton pair, the pair (V, V), and `sample_count` random
// pairs. A pair violates the lemma when its defect exceeds the bound.
MixingReport verify_mixing(const Graph& g, const NdlCertificate& cert, int sample_count,
                           std::uint64_t seed);

struct ExpansionCheck {
  int observed = 0;        // |N(X)|, external neighbourhood
  double required = 0.0;   // (d - 2 lambda)^2 / (3 lambda^2) * |X|
  bool applicable = false; // |X| <= lambda^2 n / d^2 and d > 2 lambda
  bool holds = true;       // observed >= required whenever applicable
};

ExpansionCheck expansion_check(const Graph& g, const NdlCertificate& cert, VertexMask x);

// For disjoint X, Y with |X|, |Y| > lambda n / d, reports whether e(X,Y) > 0.
// Throws Error(SetsTooSmall) or Error(SetsNotDisjoint).
bool large_sets_edge(const Graph& g, const NdlCertificate& cert, VertexMask x, VertexMask y);

}  // namespace ndl
