#include "ndl/graph.hpp"

#include <algorithm>
#include <string>

#include "ndl/error.hpp"

namespace ndl {

std::vector<int> to_vertices(VertexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_vertex(m, [&](int v) { out.push_back(v); });
  return out;
}

VertexMask to_mask(std::span<const int> vertices, int n) {
  VertexMask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " not in [0, " +
                                                  std::to_string(n) + ")");
    }
    m |= bit(v);
  }
  return m;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::InvalidParameters,
                "vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(e.u));
    }
    auto& ru = rows[static_cast<std::size_t>(e.u)];
    if ((ru >> e.v) & 1U) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " repeated");
    }
    ru |= bit(e.v);
    rows[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return from_rows(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) {
    throw Error(ErrorKind::InvalidParameters, "more than 64 vertices");
  }
  const VertexMask all = full_mask(n);
  for (int i = 0; i < n; ++i) {
    const VertexMask r = rows[static_cast<std::size_t>(i)];
    if (r & ~all) throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(i));
    if ((r >> i) & 1U) throw Error(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(i));
    for_each_vertex(r, [&](int j) {
      if (!((rows[static_cast<std::size_t>(j)] >> i) & 1U)) {
        throw Error(ErrorKind::InvalidParameters, "adjacency not symmetric at " +
                                                      std::to_string(i) + "," + std::to_string(j));
      }
    });
  }
  Graph g;
  g.n_ = n;
  g.rows_ = std::move(rows);
  g.degrees_.resize(static_cast<std::size_t>(n));
  std::transform(g.rows_.begin(), g.rows_.end(), g.degrees_.begin(),
                 [](VertexMask r) { return popcount(r); });
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int d : degrees_) twice += static_cast<std::size_t>(d);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(rows_[static_cast<std::size_t>(u)] & ~full_mask(u + 1),
                    [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (degrees_.empty()) return std::nullopt;
  const int d = degrees_.front();
  if (std::all_of(degrees_.begin(), degrees_.end(), [d](int x) { return x == d; })) return d;
  return std::nullopt;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  VertexMask seen = bit(0);
  VertexMask frontier = bit(0);
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](int v) { next |= rows_[static_cast<std::size_t>(v)]; });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full_mask(n_);
}

Graph Graph::induced(VertexMask mask) const {
  const std::vector<int> keep = to_vertices(mask & full_mask(n_));
  std::vector<VertexMask> rows(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) rows[i] |= bit(static_cast<int>(j));
    }
  }
  return from_rows(std::move(rows));
}

Graph relabeled(const Graph& g, std::span<const int> perm) {
  const int n = g.n();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorKind::InvalidParameters, "permutation length mismatch");
  }
  if (to_mask(perm, n) != full_mask(n)) {
    throw Error(ErrorKind::InvalidParameters, "not a permutation");
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(Edge::normalized(perm[static_cast<std::size_t>(e.u)],
                                     perm[static_cast<std::size_t>(e.v)]));
  }
  return Graph::from_edges(n, edges);
}

}  // namespace ndl
