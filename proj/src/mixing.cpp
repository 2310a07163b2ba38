#include "ndl/mixing.hpp"

#include <cmath>
#include <limits>

#include "ndl/error.hpp"
#include "ndl/rng.hpp"

namespace ndl {
namespace {

// Absolute slack on defect <= bound; the bound itself is a real number
// computed from a floating-point lambda.
constexpr double kMixingSlack = 1e-9;

void require_subset(const Graph& g, VertexMask m) {
  if (m & ~full_mask(g.n())) throw Error(ErrorKind::IndexOutOfRange, "vertex set exceeds graph");
}

VertexMask random_subset(Rng& rng, int n) {
  const int size = rng.between(1, n);
  std::vector<int> vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vertices[static_cast<std::size_t>(i)] = i;
  // Partial Fisher-Yates: the first `size` entries are a uniform sample.
  VertexMask m = 0;
  for (int i = 0; i < size; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);
    m |= bit(vertices[static_cast<std::size_t>(i)]);
  }
  return m;
}

}  // namespace

std::int64_t edge_count(const Graph& g, VertexMask s, VertexMask t) {
  require_subset(g, s);
  require_subset(g, t);
  std::int64_t total = 0;
  for_each_vertex(s, [&](int u) { total += popcount(g.neighbors(u) & t); });
  return total;
}

MixingDefect mixing_defect(const Graph& g, const NdlCertificate& cert, VertexMask s, VertexMask t) {
  if (s == 0 || t == 0) throw Error(ErrorKind::EmptySet, "mixing needs nonempty S and T");
  MixingDefect out;
  out.edges = edge_count(g, s, t);
  const double size_product = static_cast<double>(popcount(s)) * static_cast<double>(popcount(t));
  const double expected = static_cast<double>(cert.d) / static_cast<double>(cert.n) * size_product;
  out.defect = std::fabs(static_cast<double>(out.edges) - expected);
  out.bound = cert.lambda * std::sqrt(size_product);
  return out;
}

MixingReport verify_mixing(const Graph& g, const NdlCertificate& cert, int sample_count,
                           std::uint64_t seed) {
  if (sample_count < 1) throw Error(ErrorKind::InvalidParameters, "sample_count must be >= 1");
  MixingReport report;
  bool first = true;
  auto check = [&](VertexMask s, VertexMask t) {
    const MixingDefect m = mixing_defect(g, cert, s, t);
    ++report.pairs_checked;
    double normalized;
    if (m.bound > 0.0) {
      normalized = m.defect / m.bound;
    } else {
      normalized = m.defect > kMixingSlack ? std::numeric_limits<double>::infinity() : 0.0;
    }
    if (m.defect > m.bound + kMixingSlack) ++report.violations;
    if (first || normalized > report.max_normalized_defect) {
      report.max_normalized_defect = normalized;
      report.worst_pair = {s, t};
      first = false;
    }
  };

  const int n = g.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) check(bit(i), bit(j));
  check(full_mask(n), full_mask(n));
  // stars: the tightest small pairs, rarely hit by the sampler
  for (int v = 0; v < n; ++v)
    if (g.neighbors(v)) check(bit(v), g.neighbors(v));

  Rng rng(seed);
  for (int k = 0; k < sample_count; ++k) {
    const VertexMask s = random_subset(rng, n);
    const VertexMask t = random_subset(rng, n);
    check(s, t);
  }
  return report;
}

ExpansionCheck expansion_check(const Graph& g, const NdlCertificate& cert, VertexMask x) {
  require_subset(g, x);
  if (x == 0) throw Error(ErrorKind::EmptySet, "expansion needs a nonempty X");
  ExpansionCheck out;
  VertexMask neighborhood = 0;
  for_each_vertex(x, [&](int v) { neighborhood |= g.neighbors(v); });
  out.observed = popcount(neighborhood & ~x);

  const double size = popcount(x);
  const double d = cert.d;
  const double lambda = cert.lambda;
  // for d <= 2 lambda the bound says nothing (the square hides the sign)
  out.applicable = d > 2.0 * lambda && size <= lambda * lambda * cert.n / (d * d);
  out.required = lambda > 0.0 ? (d - 2.0 * lambda) * (d - 2.0 * lambda) / (3.0 * lambda * lambda) * size
                              : std::numeric_limits<double>::infinity();
  out.holds = !out.applicable || static_cast<double>(out.observed) >= out.required;
  return out;
}

bool large_sets_edge(const Graph& g, const NdlCertificate& cert, VertexMask x, VertexMask y) {
  require_subset(g, x);
  require_subset(g, y);
  if (x & y) throw Error(ErrorKind::SetsNotDisjoint, "X and Y intersect");
  const double threshold = cert.lambda * cert.n / cert.d;
  if (!(popcount(x) > threshold) || !(popcount(y) > threshold)) {
    throw Error(ErrorKind::SetsTooSmall,
                "both sets need more than lambda*n/d = " + std::to_string(threshold) + " vertices");
  }
  return edge_count(g, x, y) > 0;
}

}  // namespace ndl
