#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ndl {

// A vertex subset of a graph with at most 64 vertices, bit i <=> vertex i.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
inline constexpr int popcount(VertexMask m) { return std::popcount(m); }
inline constexpr int lowest(VertexMask m) { return std::countr_zero(m); }
inline constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

// Calls f(v) for every vertex v in `m`, in increasing order.
template <class F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

std::vector<int> to_vertices(VertexMask m);
VertexMask to_mask(std::span<const int> vertices, int n);

struct Edge {
  int u = 0;
  int v = 0;

  // Orders endpoints so that u < v.
  static Edge normalized(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with dense adjacency rows.
// Immutable after construction; the constructors enforce symmetry and
// loop-freeness.
class Graph {
 public:
  Graph() = default;

  // Throws Error(IndexOutOfRange | SelfLoop | DuplicateEdge | InvalidParameters).
  static Graph from_edges(int n, std::span<const Edge> edges);
  // Rows must describe a symmetric, loop-free relation.
  static Graph from_rows(std::vector<VertexMask> rows);

  int n() const { return n_; }
  VertexMask neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const { return degrees_; }
  std::span<const VertexMask> rows() const { return rows_; }
  bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }

  std::size_t edge_count() const;
  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Common degree if every vertex has the same degree.
  std::optional<int> regular_degree() const;
  bool connected() const;

  // G[mask], relabelled to 0..|mask|-1 in increasing vertex order.
  Graph induced(VertexMask mask) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> rows_;
  std::vector<int> degrees_;
};

// Graph with vertex v renamed to perm[v]; perm must be a permutation of 0..n-1.
Graph relabeled(const Graph& g, std::span<const int> perm);

}  // namespace ndl
