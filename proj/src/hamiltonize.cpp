#include "ndl/hamiltonize.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_set>

#include "ndl/error.hpp"

namespace ndl {
namespace {

TraceRecord deletion(int u, int v) {
  const Edge e = Edge::normalized(u, v);
  return {TraceRecord::Op::Delete, e.u, e.v};
}

TraceRecord insertion(int u, int v) {
  const Edge e = Edge::normalized(u, v);
  return {TraceRecord::Op::Insert, e.u, e.v};
}

VertexMask mask_of(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

struct PathHash {
  std::size_t operator()(const std::vector<int>& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

// A path and its reverse are the same undirected path.
std::vector<int> orientation_key(const std::vector<int>& p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return std::min(p, r);
}

struct SearchNode {
  std::vector<int> path;
  std::size_t parent = 0;
  TraceRecord removed;
  TraceRecord added;
};

bool extendable(const Graph& g, const std::vector<int>& path, VertexMask blocked) {
  const VertexMask outside = full_mask(g.n()) & ~blocked;
  return ((g.neighbors(path.front()) | g.neighbors(path.back())) & outside) != 0;
}

bool closable(const Graph& g, const std::vector<int>& path) {
  return path.size() >= 3 && g.adjacent(path.front(), path.back());
}

// Appends the Pósa rotations of `p` in expansion order: pivots at the tail
// by increasing vertex, then pivots at the head by increasing vertex.
void rotations_of(const Graph& g, const std::vector<int>& p, std::vector<SearchNode>& out, std::size_t parent) {
  const std::size_t len = p.size();
  if (len < 3) return;
  const int head = p.front();
  const int tail = p.back();

  std::vector<std::pair<int, std::size_t>> pivots;
  for (std::size_t i = 0; i + 2 < len; ++i)
    if (g.adjacent(p[i], tail)) pivots.emplace_back(p[i], i);
  std::sort(pivots.begin(), pivots.end());
  for (const auto& [vertex, i] : pivots) {
    SearchNode node;
    node.path.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    node.path.insert(node.path.end(), p.rbegin(), p.rend() - static_cast<std::ptrdiff_t>(i) - 1);
    node.parent = parent;
    node.removed = deletion(p[i], p[i + 1]);
    node.added = insertion(vertex, tail);
    out.push_back(std::move(node));
  }

  pivots.clear();
  for (std::size_t j = 2; j < len; ++j)
    if (g.adjacent(p[j], head)) pivots.emplace_back(p[j], j);
  std::sort(pivots.begin(), pivots.end());
  for (const auto& [vertex, j] : pivots) {
    SearchNode node;
    node.path.assign(p.rend() - static_cast<std::ptrdiff_t>(j), p.rend());
    node.path.insert(node.path.end(), p.begin() + static_cast<std::ptrdiff_t>(j), p.end());
    node.parent = parent;
    node.removed = deletion(p[j - 1], p[j]);
    node.added = insertion(head, vertex);
    out.push_back(std::move(node));
  }
}

void validate_path(const Graph& g, const std::vector<int>& path) {
  if (path.empty()) throw Error(ErrorKind::InvalidPath, "empty path");
  VertexMask seen = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int v = path[i];
    if (v < 0 || v >= g.n()) throw Error(ErrorKind::InvalidPath, "vertex out of range");
    if (seen & bit(v)) throw Error(ErrorKind::InvalidPath, "vertex " + std::to_string(v) + " repeated");
    seen |= bit(v);
    if (i > 0 && !g.adjacent(path[i - 1], v)) {
      throw Error(ErrorKind::InvalidPath,
                  std::to_string(path[i - 1]) + "," + std::to_string(v) + " is not an edge");
    }
  }
}

// posa_close without the budget >= 1 precondition.
PosaResult posa_search(const Graph& g, const std::vector<int>& start, VertexMask forbidden, int budget) {
  const VertexMask on_path = mask_of(start);
  const VertexMask blocked = on_path | forbidden;

  std::vector<SearchNode> nodes;
  nodes.push_back({start, 0, {}, {}});
  std::unordered_set<std::vector<int>, PathHash> visited{orientation_key(start)};

  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  for (int depth = 0;; ++depth) {
    std::optional<std::size_t> accepted;
    PosaOutcome outcome = PosaOutcome::Failed;
    for (std::size_t i = level_begin; i < level_end && !accepted; ++i) {
      if (extendable(g, nodes[i].path, blocked)) {
        accepted = i;
        outcome = PosaOutcome::Extendable;
      }
    }
    for (std::size_t i = level_begin; i < level_end && !accepted; ++i) {
      if (closable(g, nodes[i].path)) {
        accepted = i;
        outcome = PosaOutcome::Closed;
      }
    }
    if (accepted) {
      PosaResult result;
      result.outcome = outcome;
      result.path = nodes[*accepted].path;
      result.rotations = depth;
      for (std::size_t i = *accepted; i != 0; i = nodes[i].parent) {
        result.trace.push_back(nodes[i].added);
        result.trace.push_back(nodes[i].removed);
      }
      std::reverse(result.trace.begin(), result.trace.end());
      return result;
    }
    if (depth >= budget) return {PosaOutcome::Failed, start, {}, 0, "budget-exhausted"};

    std::vector<SearchNode> next;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      next.clear();
      rotations_of(g, nodes[i].path, next, i);
      for (auto& node : next) {
        if (!visited.insert(orientation_key(node.path)).second) continue;
        nodes.push_back(std::move(node));
      }
      if (nodes.size() > kPosaStateLimit) return {PosaOutcome::Failed, start, {}, 0, "state-limit"};
    }
    if (nodes.size() == level_end) return {PosaOutcome::Failed, start, {}, 0, "rotations-exhausted"};
    level_begin = level_end;
    level_end = nodes.size();
  }
}

// Path through component `c` starting at `entry`: edge components need no
// deletion; a cycle loses the edge from `entry` to its smaller cycle
// neighbour and is walked away from that neighbour.
std::vector<int> open_component(const std::vector<int>& c, int entry, std::vector<TraceRecord>& records) {
  const std::size_t len = c.size();
  const std::size_t at = static_cast<std::size_t>(std::find(c.begin(), c.end(), entry) - c.begin());
  if (len == 2) return {entry, c[1 - at]};
  const int prev = c[(at + len - 1) % len];
  const int next = c[(at + 1) % len];
  const bool drop_next = next < prev;
  records.push_back(deletion(entry, drop_next ? next : prev));
  std::vector<int> seq;
  for (std::size_t step = 0; step < len; ++step) {
    seq.push_back(drop_next ? c[(at + len - step) % len] : c[(at + step) % len]);
  }
  return seq;
}

struct Extension {
  bool at_tail = true;
  int outside = -1;
};

std::optional<Extension> find_extension(const Graph& g, const std::vector<int>& path) {
  const VertexMask outside = full_mask(g.n()) & ~mask_of(path);
  const VertexMask from_tail = g.neighbors(path.back()) & outside;
  const VertexMask from_head = g.neighbors(path.front()) & outside;
  if ((from_tail | from_head) == 0) return std::nullopt;
  const int x = lowest(from_tail | from_head);
  return Extension{((from_tail >> x) & 1U) != 0, x};
}

}  // namespace

PosaResult posa_close(const Graph& g, const std::vector<int>& path, VertexMask forbidden, int budget) {
  validate_path(g, path);
  if (budget < 1) throw Error(ErrorKind::InvalidParameters, "rotation budget must be >= 1");
  return posa_search(g, path, forbidden, budget);
}

std::size_t per_merge_budget(const NdlCertificate& cert, double budget_constant) {
  if (!(cert.eigenvalue_ratio > 1.0)) return static_cast<std::size_t>(cert.n);
  const double raw = budget_constant * std::log(static_cast<double>(cert.n)) / std::log(cert.eigenvalue_ratio);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(raw)));
}

RotationTrace two_factor_to_hamilton(const Graph& g, const TwoFactor& f, const NdlCertificate& cert,
                                     double budget_constant) {
  validate_two_factor(g, f);
  const int n = g.n();
  RotationTrace out;
  out.budget = per_merge_budget(cert, budget_constant);
  auto fail = [&](std::string why) {
    out.success = false;
    out.failure = std::move(why);
    out.replacements = out.trace.size();
    return out;
  };
  if (n < 3) return fail("too-few-vertices");

  const TwoFactor factor = canonicalized(f);
  if (factor.components.size() == 1) {
    out.success = true;
    out.hamilton_cycle = factor.components.front();
    return out;
  }
  if (!g.connected()) return fail("disconnected");

  RotationState state;
  state.remaining_components.assign(factor.components.begin() + 1, factor.components.end());
  std::vector<TraceRecord> pending;

  // Open the component of vertex 0 at its smallest vertex with an outside
  // neighbour, leaving that vertex as the tail of the path.
  const auto& first = factor.components.front();
  const VertexMask first_mask = mask_of(first);
  int opener = -1;
  for (int v : first)
    if ((g.neighbors(v) & ~first_mask) && (opener < 0 || v < opener)) opener = v;
  state.current_path = open_component(first, opener, pending);
  std::reverse(state.current_path.begin(), state.current_path.end());
  state.absorbed = first_mask;

  auto absorb = [&](const Extension& ext) {
    if (!ext.at_tail) std::reverse(state.current_path.begin(), state.current_path.end());
    pending.push_back(insertion(state.current_path.back(), ext.outside));
    const auto it = std::find_if(state.remaining_components.begin(), state.remaining_components.end(),
                                 [&](const auto& c) { return std::find(c.begin(), c.end(), ext.outside) != c.end(); });
    const auto seq = open_component(*it, ext.outside, pending);
    state.current_path.insert(state.current_path.end(), seq.begin(), seq.end());
    state.absorbed |= mask_of(*it);
    state.remaining_components.erase(it);
  };
  auto commit = [&]() {
    out.per_merge_replacements.push_back(pending.size());
    out.trace.insert(out.trace.end(), pending.begin(), pending.end());
    state.trace.insert(state.trace.end(), pending.begin(), pending.end());
    pending.clear();
  };
  const auto budget = static_cast<long long>(out.budget);
  auto rotation_allowance = [&]() {
    return static_cast<int>(std::max<long long>(0, (budget - static_cast<long long>(pending.size()) - 1) / 2));
  };

  while (!state.remaining_components.empty()) {
    std::optional<Extension> ext = find_extension(g, state.current_path);
    if (!ext) {
      const PosaResult rotated = posa_search(g, state.current_path, 0, rotation_allowance());
      if (rotated.outcome == PosaOutcome::Failed) return fail(rotated.failure);
      pending.insert(pending.end(), rotated.trace.begin(), rotated.trace.end());
      state.current_path = rotated.path;
      if (rotated.outcome == PosaOutcome::Closed) {
        // Close the cycle, then reopen it at its smallest vertex that has
        // a neighbour off the cycle.
        auto& p = state.current_path;
        pending.push_back(insertion(p.front(), p.back()));
        const VertexMask outside = full_mask(n) & ~mask_of(p);
        int pivot = -1;
        for (int v : p)
          if ((g.neighbors(v) & outside) && (pivot < 0 || v < pivot)) pivot = v;
        const std::vector<int> cycle = p;
        p = open_component(cycle, pivot, pending);
        std::reverse(p.begin(), p.end());
      }
      ext = find_extension(g, state.current_path);
      if (!ext) return fail("no-extension");
    }
    absorb(*ext);
    if (static_cast<long long>(pending.size()) > budget) return fail("budget-exhausted");
    commit();
  }

  const auto& p = state.current_path;
  if (closable(g, p)) {
    pending.push_back(insertion(p.front(), p.back()));
  } else {
    const PosaResult rotated = posa_search(g, p, 0, rotation_allowance());
    if (rotated.outcome != PosaOutcome::Closed) {
      return fail(rotated.failure.empty() ? "no-closing-edge" : rotated.failure);
    }
    pending.insert(pending.end(), rotated.trace.begin(), rotated.trace.end());
    state.current_path = rotated.path;
    pending.push_back(insertion(state.current_path.front(), state.current_path.back()));
  }
  if (static_cast<long long>(pending.size()) > budget) return fail("budget-exhausted");
  commit();

  out.success = true;
  out.hamilton_cycle = canonical_cycle(state.current_path);
  out.replacements = out.trace.size();
  return out;
}

ReplayResult replay(const Graph& g, const TwoFactor& f, const RotationTrace& trace) {
  auto inconsistent = [](const std::string& why) { return Error(ErrorKind::InconsistentTrace, why); };
  if (trace.replacements != trace.trace.size()) throw inconsistent("replacement count differs from trace length");

  const auto initial = f.edge_set();
  std::set<Edge> edges(initial.begin(), initial.end());
  for (const TraceRecord& r : trace.trace) {
    const Edge e = Edge::normalized(r.u, r.v);
    const std::string name = std::to_string(e.u) + "," + std::to_string(e.v);
    if (e.u < 0 || e.v >= g.n() || e.u == e.v) throw inconsistent("record " + name + " out of range");
    if (r.op == TraceRecord::Op::Delete) {
      if (edges.erase(e) == 0) throw inconsistent("deleted edge " + name + " not present");
    } else {
      if (!g.adjacent(e.u, e.v)) throw inconsistent("inserted pair " + name + " is not an edge");
      if (!edges.insert(e).second) throw inconsistent("inserted edge " + name + " already present");
    }
  }

  ReplayResult result;
  result.edges.assign(edges.begin(), edges.end());

  // Decode a Hamilton cycle when every vertex has degree two and the edges
  // form one cycle through all vertices.
  const int n = g.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  const bool two_regular = n >= 3 && static_cast<int>(edges.size()) == n &&
                           std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; });
  if (two_regular) {
    std::vector<int> cycle{0};
    int prev = -1;
    int cur = 0;
    while (true) {
      const auto& a = adj[static_cast<std::size_t>(cur)];
      const int nxt = a[0] != prev ? a[0] : a[1];
      if (nxt == 0) break;
      cycle.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    if (static_cast<int>(cycle.size()) == n) result.hamilton_cycle = canonical_cycle(cycle);
  }

  if (trace.success) {
    if (!result.hamilton_cycle) throw inconsistent("successful trace does not end on a Hamilton cycle");
    if (*result.hamilton_cycle != canonical_cycle(trace.hamilton_cycle)) {
      throw inconsistent("replayed cycle differs from the recorded Hamilton cycle");
    }
  }
  return result;
}

}  // namespace ndl
