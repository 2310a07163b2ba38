#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ndl/factors.hpp"
#include "ndl/graph.hpp"
#include "ndl/spectral.hpp"

namespace ndl {

struct TraceRecord {
  enum class Op { Delete, Insert };
  Op op = Op::Insert;
  int u = 0;
  int v = 0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

// Working state of the 2-factor to Hamilton cycle conversion: a growing
// path plus the components of the input 2-factor not yet absorbed.
struct RotationState {
  std::vector<int> current_path;
  VertexMask absorbed = 0;
  std::vector<std::vector<int>> remaining_components;
  std::vector<TraceRecord> trace;
};

struct RotationTrace {
  bool success = false;
  std::vector<int> hamilton_cycle;                   // canonical, when successful
  std::size_t replacements = 0;                      // == trace.size()
  std::vector<std::size_t> per_merge_replacements;   // one entry per component-count decrement
  std::size_t budget = 0;                            // per-merge replacement budget
  std::vector<TraceRecord> trace;
  std::string failure;                               // empty on success
};

enum class PosaOutcome { Closed, Extendable, Failed };

struct PosaResult {
  PosaOutcome outcome = PosaOutcome::Failed;
  std::vector<int> path;             // after the recorded rotations
  std::vector<TraceRecord> trace;    // one delete + one insert per rotation
  int rotations = 0;
  std::string failure;
};

// Upper bound on the number of distinct paths a single rotation search may
// visit before giving up.
inline constexpr std::size_t kPosaStateLimit = std::size_t{1} << 20;

// Breadth-first search over Pósa rotations at either endpoint of `path`,
// returning the shortest rotation sequence (ties broken by smallest pivot
// vertex, tail before head) that reaches a path whose endpoints are
// adjacent (Closed, needs |path| >= 3) or one of whose endpoints has a
// neighbour outside V(path) ∪ forbidden (Extendable; preferred when both
// occur at the same depth). At most `budget` rotations.
// Throws Error(InvalidPath) for a non-simple or non-edge path, and
// Error(InvalidParameters) for budget < 1.
PosaResult posa_close(const Graph& g, const std::vector<int>& path, VertexMask forbidden, int budget);

// ceil(budget_constant * log n / log(d/lambda)); n when d/lambda <= 1.
std::size_t per_merge_budget(const NdlCertificate& cert, double budget_constant);

// Converts a 2-factor into a Hamilton cycle: opens the component of the
// smallest vertex into a path, absorbs further components through edges
// leaving the path's endpoints, and rotates with posa_close when stuck.
// Failure (budget exhausted, no extension, disconnected graph) is reported
// in the trace, not thrown. Throws Error(InvalidTwoFactor).
RotationTrace two_factor_to_hamilton(const Graph& g, const TwoFactor& f, const NdlCertificate& cert,
                                     double budget_constant = 10.0);

struct ReplayResult {
  std::vector<Edge> edges;                         // edge set after the trace
  std::optional<std::vector<int>> hamilton_cycle;  // set when `edges` is a Hamilton cycle
};

// Applies the trace's deletions and insertions to E(f) and audits them: each
// deleted edge must be present, each inserted edge must be an edge of g not
// yet present, and a successful trace must end on exactly its recorded cycle.
// Throws Error(InconsistentTrace).
ReplayResult replay(const Graph& g, const TwoFactor& f, const RotationTrace& trace);

}  // namespace ndl
