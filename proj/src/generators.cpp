#include "ndl/generators.hpp"

#include <algorithm>
#include <sstream>

#include "ndl/error.hpp"
#include "ndl/rng.hpp"

namespace ndl {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidParameters, what);
}

void require_vertex_count(int n, int min_n, const char* family) {
  if (n < min_n || n > kMaxVertices) {
    invalid(std::string(family) + " needs " + std::to_string(min_n) + " <= n <= 64, got " +
            std::to_string(n));
  }
}

Graph paley_graph(int q) {
  if (!is_prime(q) || q % 4 != 1) invalid("paley needs a prime q = 1 (mod 4), got " + std::to_string(q));
  require_vertex_count(q, 5, "paley");
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (int x = 1; x < q; ++x) residue[static_cast<std::size_t>((x * x) % q)] = true;
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      if (residue[static_cast<std::size_t>(j - i)]) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(q, edges);
}

Graph complete_graph(int n) {
  require_vertex_count(n, 1, "complete");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

Graph circulant_graph(int n, const std::vector<int>& connection) {
  require_vertex_count(n, 3, "circulant");
  if (connection.empty()) invalid("circulant needs a nonempty connection set");
  std::vector<int> sorted = connection;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    invalid("circulant connection set has repeated entries");
  }
  if (sorted.front() < 1 || sorted.back() > n / 2) {
    invalid("circulant connection set must lie in {1.." + std::to_string(n / 2) + "}");
  }
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int s : sorted) {
      rows[static_cast<std::size_t>(i)] |= bit((i + s) % n) | bit((i - s + n) % n);
    }
  }
  return Graph::from_rows(std::move(rows));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::normalized(i, (i + 1) % 5));          // outer 5-cycle
    edges.push_back(Edge::normalized(i, i + 5));                // spokes
    edges.push_back(Edge::normalized(5 + i, 5 + (i + 2) % 5));  // inner pentagram
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(10, edges);
}

Graph random_regular_graph(int n, int d, std::uint64_t seed) {
  require_vertex_count(n, 3, "random-regular");
  if (d < 2 || d >= n) invalid("random-regular needs 2 <= d < n");
  if ((n * d) % 2 != 0) invalid("random-regular needs n*d even");

  // Configuration-model pairing done sequentially: the lowest unpaired point
  // is matched to a uniformly chosen admissible point (no loop, no repeated
  // edge); a dead end restarts the whole pairing.
  Rng rng(seed);
  const int points = n * d;
  std::vector<int> free_points;
  std::vector<int> candidates;
  for (int attempt = 0; attempt < kConfigurationModelRetries; ++attempt) {
    free_points.resize(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) free_points[static_cast<std::size_t>(i)] = i;
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    bool stuck = false;
    while (!free_points.empty()) {
      const int u = free_points.front() / d;
      candidates.clear();
      for (std::size_t j = 1; j < free_points.size(); ++j) {
        const int v = free_points[j] / d;
        if (v != u && !((rows[static_cast<std::size_t>(u)] >> v) & 1U)) candidates.push_back(static_cast<int>(j));
      }
      if (candidates.empty()) {
        stuck = true;
        break;
      }
      const auto pick = static_cast<std::size_t>(candidates[static_cast<std::size_t>(rng.below(candidates.size()))]);
      const int v = free_points[pick] / d;
      rows[static_cast<std::size_t>(u)] |= bit(v);
      rows[static_cast<std::size_t>(v)] |= bit(u);
      free_points.erase(free_points.begin() + static_cast<std::ptrdiff_t>(pick));
      free_points.erase(free_points.begin());
    }
    if (!stuck) return Graph::from_rows(std::move(rows));
  }
  throw Error(ErrorKind::GenerationTimeout,
              "configuration model exceeded " + std::to_string(kConfigurationModelRetries) +
                  " restarts for n=" + std::to_string(n) + ", d=" + std::to_string(d));
}

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Paley: return "paley";
    case Family::RandomRegular: return "random-regular";
    case Family::Complete: return "complete";
    case Family::Cycle: return "cycle";
    case Family::Petersen: return "petersen";
    case Family::Circulant: return "circulant";
  }
  return "unknown";
}

Family parse_family(std::string_view tag) {
  for (Family f : {Family::Paley, Family::RandomRegular, Family::Complete, Family::Cycle,
                   Family::Petersen, Family::Circulant}) {
    if (to_string(f) == tag) return f;
  }
  invalid("unknown graph family '" + std::string(tag) + "'");
}

GraphFamilySpec GraphFamilySpec::paley(int q) {
  GraphFamilySpec s;
  s.family = Family::Paley;
  s.q = q;
  return s;
}

GraphFamilySpec GraphFamilySpec::random_regular(int n, int d, std::uint64_t seed) {
  GraphFamilySpec s;
  s.family = Family::RandomRegular;
  s.n = n;
  s.d = d;
  s.seed = seed;
  return s;
}

GraphFamilySpec GraphFamilySpec::complete(int n) {
  GraphFamilySpec s;
  s.family = Family::Complete;
  s.n = n;
  return s;
}

GraphFamilySpec GraphFamilySpec::cycle(int n) {
  GraphFamilySpec s;
  s.family = Family::Cycle;
  s.n = n;
  return s;
}

GraphFamilySpec GraphFamilySpec::petersen() {
  GraphFamilySpec s;
  s.family = Family::Petersen;
  return s;
}

GraphFamilySpec GraphFamilySpec::circulant(int n, std::vector<int> connection) {
  GraphFamilySpec s;
  s.family = Family::Circulant;
  s.n = n;
  s.connection = std::move(connection);
  return s;
}

std::string GraphFamilySpec::describe() const {
  std::ostringstream out;
  out << to_string(family);
  switch (family) {
    case Family::Paley: out << "(" << q << ")"; break;
    case Family::RandomRegular: out << "(n=" << n << ",d=" << d << ",seed=" << seed << ")"; break;
    case Family::Complete:
    case Family::Cycle: out << "(" << n << ")"; break;
    case Family::Petersen: break;
    case Family::Circulant: {
      out << "(" << n << ";";
      for (std::size_t i = 0; i < connection.size(); ++i) out << (i ? "," : "") << connection[i];
      out << ")";
      break;
    }
  }
  return out.str();
}

Graph generate(const GraphFamilySpec& spec) {
  switch (spec.family) {
    case Family::Paley: return paley_graph(spec.q);
    case Family::RandomRegular: return random_regular_graph(spec.n, spec.d, spec.seed);
    case Family::Complete: return complete_graph(spec.n);
    case Family::Cycle:
      require_vertex_count(spec.n, 3, "cycle");
      return circulant_graph(spec.n, {1});
    case Family::Petersen: return petersen_graph();
    case Family::Circulant: return circulant_graph(spec.n, spec.connection);
  }
  invalid("unhandled family");
}

}  // namespace ndl
