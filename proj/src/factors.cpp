#include "ndl/factors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "ndl/error.hpp"

namespace ndl {
namespace {

void require_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorKind::TooLarge,
                std::string(what) + " capped at n=" + std::to_string(cap) + ", got " + std::to_string(n));
  }
}

[[noreturn]] void bad_factor(const std::string& why) { throw Error(ErrorKind::InvalidTwoFactor, why); }

// Backtracking enumerator. Edges outside `reference` cost one unit each (an
// edge component counts its edge twice) and branches whose cost exceeds
// `limit` are cut; with limit < 0 there is no cut.
class FactorEnumerator {
 public:
  FactorEnumerator(const Graph& g, const TwoFactorVisitor& visit, std::vector<VertexMask> reference, int limit)
      : g_(g), visit_(visit), reference_(std::move(reference)), limit_(limit) {}

  void run() { place(full_mask(g_.n()), 0); }

 private:
  int cost(int u, int v) const {
    if (limit_ < 0) return 0;
    return ((reference_[static_cast<std::size_t>(u)] >> v) & 1U) ? 0 : 1;
  }
  bool over(int c) const { return limit_ >= 0 && c > limit_; }

  void place(VertexMask uncovered, int spent) {
    if (uncovered == 0) {
      visit_(current_);
      return;
    }
    const int v = lowest(uncovered);
    const VertexMask rest = uncovered & ~bit(v);
    for_each_vertex(g_.neighbors(v) & rest, [&](int a) {
      const int c = spent + cost(v, a);
      if (over(c)) return;
      // an edge component uses its edge twice; the second copy is never in the reference
      if (!over(c + (limit_ < 0 ? 0 : 1))) {
        current_.components.push_back({v, a});
        place(rest & ~bit(a), c + (limit_ < 0 ? 0 : 1));
        current_.components.pop_back();
      }

      path_ = {v, a};
      extend(rest & ~bit(a), c);
    });
  }

  // path_ runs from the component's smallest vertex; cycles close back to it.
  void extend(VertexMask available, int spent) {
    const int head = path_.front();
    const int last = path_.back();
    for_each_vertex(g_.neighbors(last) & available, [&](int x) {
      const int c = spent + cost(last, x);
      if (over(c)) return;
      path_.push_back(x);
      if (g_.adjacent(x, head) && path_[1] < x) {
        const int closed = c + cost(x, head);
        if (!over(closed)) {
          current_.components.push_back(path_);
          const std::vector<int> saved = path_;
          place(available & ~bit(x), closed);
          path_ = saved;
          current_.components.pop_back();
        }
      }
      extend(available & ~bit(x), c);
      path_.pop_back();
    });
  }

  const Graph& g_;
  const TwoFactorVisitor& visit_;
  std::vector<VertexMask> reference_;
  int limit_;
  TwoFactor current_;
  std::vector<int> path_;
};

// Tables over all vertex subsets for n <= 16: the number of ways each set
// forms one component, and from them the 2-factor counts of every induced
// subgraph split by component count.
class SubsetFactorTable {
 public:
  explicit SubsetFactorTable(const Graph& g) : n_(g.n()), slots_(n_ / 2 + 1) {
    const std::size_t sets = std::size_t{1} << n_;
    component_.assign(sets, 0);
    count_.assign(sets * static_cast<std::size_t>(slots_), 0);
    weighted_.assign(sets * static_cast<std::size_t>(slots_), 0);
    count_components(g);
    combine();
  }

  std::uint64_t count(VertexMask mask, int s) const { return count_[index(mask, s)]; }
  std::uint64_t weighted(VertexMask mask, int s) const { return weighted_[index(mask, s)]; }
  std::uint64_t total(VertexMask mask) const {
    std::uint64_t t = 0;
    for (int s = 0; s < slots_; ++s) t += count(mask, s);
    return t;
  }
  int slots() const { return slots_; }

 private:
  std::size_t index(VertexMask mask, int s) const {
    return static_cast<std::size_t>(mask) * static_cast<std::size_t>(slots_) + static_cast<std::size_t>(s);
  }

  // component_[S] = 1 if S is an edge; the number of Hamilton cycles of
  // G[S] if |S| >= 3. Paths are rooted at min(S) and counted per endpoint.
  void count_components(const Graph& g) {
    const std::size_t sets = std::size_t{1} << n_;
    std::vector<std::uint64_t> paths(sets * static_cast<std::size_t>(n_), 0);
    auto at = [&](VertexMask s, int v) -> std::uint64_t& {
      return paths[static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    };
    for (int v = 0; v < n_; ++v) at(bit(v), v) = 1;
    for (VertexMask s = 1; s < sets; ++s) {
      const int root = lowest(s);
      const VertexMask above_root = ~full_mask(root + 1);
      std::uint64_t closing = 0;
      for_each_vertex(s, [&](int v) {
        const std::uint64_t here = at(s, v);
        if (here == 0) return;
        if (g.adjacent(v, root)) closing += here;
        for_each_vertex(g.neighbors(v) & ~s & above_root & full_mask(n_),
                        [&](int u) { at(s | bit(u), u) += here; });
      });
      const int size = popcount(s);
      if (size == 2) component_[s] = g.adjacent(root, lowest(s & ~bit(root))) ? 1 : 0;
      if (size >= 3) component_[s] = closing / 2;
    }
  }

  void combine() {
    const std::size_t sets = std::size_t{1} << n_;
    count_[index(0, 0)] = 1;
    weighted_[index(0, 0)] = 1;
    for (VertexMask mask = 1; mask < sets; ++mask) {
      const int v = lowest(mask);
      const VertexMask rest = mask & ~bit(v);
      // Every sub-mask t of rest, including rest itself and the empty set.
      VertexMask t = rest;
      while (true) {
        const VertexMask component = t | bit(v);
        const std::uint64_t ways = component_[component];
        if (ways != 0) {
          const VertexMask remainder = rest & ~t;
          const std::uint64_t weight = popcount(component) >= 3 ? 2 : 1;
          for (int s = 0; s + 1 < slots_; ++s) {
            const std::uint64_t c = count_[index(remainder, s)];
            if (c == 0) continue;
            count_[index(mask, s + 1)] += ways * c;
            weighted_[index(mask, s + 1)] += ways * weight * weighted_[index(remainder, s)];
          }
        }
        if (t == 0) break;
        t = (t - 1) & rest;
      }
    }
  }

  int n_;
  int slots_;
  std::vector<std::uint64_t> component_;
  std::vector<std::uint64_t> count_;
  std::vector<std::uint64_t> weighted_;
};

std::uint64_t binomial_u64(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Hamilton paths from a fixed root, layered by subset size so that only two
// layers are resident. Subsets of the non-root vertices are indexed by their
// colexicographic rank; within a subset, by the endpoint's position.
template <class Count>
Count hamilton_paths_closed(const Graph& g) {
  const int n = g.n();
  const int m = n - 1;
  std::vector<VertexMask> adj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) adj[static_cast<std::size_t>(i)] = g.neighbors(i + 1) >> 1;
  const VertexMask root_adj = g.neighbors(0) >> 1;

  std::vector<std::vector<std::uint64_t>> choose(static_cast<std::size_t>(m + 1),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(m + 2), 0));
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m + 1; ++b) choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = binomial_u64(a, b);

  std::vector<Count> previous(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) previous[static_cast<std::size_t>(i)] = ((root_adj >> i) & 1U) ? 1 : 0;

  std::vector<int> elems(static_cast<std::size_t>(m));
  std::vector<std::uint64_t> prefix(static_cast<std::size_t>(m + 1));
  std::vector<std::uint64_t> suffix(static_cast<std::size_t>(m + 1));
  for (int k = 2; k <= m; ++k) {
    std::vector<Count> layer(choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] * static_cast<std::size_t>(k));
    const VertexMask limit = full_mask(m);
    std::size_t rank = 0;
    for (VertexMask s = full_mask(k); s <= limit; ++rank) {
      int idx = 0;
      for_each_vertex(s, [&](int v) { elems[static_cast<std::size_t>(idx++)] = v; });
      // rank(S \ {b_p}) = sum_{i<p} C(b_i, i+1) + sum_{i>p} C(b_i, i)
      prefix[0] = 0;
      for (int i = 0; i < k; ++i)
        prefix[static_cast<std::size_t>(i + 1)] =
            prefix[static_cast<std::size_t>(i)] + choose[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])][static_cast<std::size_t>(i + 1)];
      suffix[static_cast<std::size_t>(k)] = 0;
      for (int i = k - 1; i >= 0; --i)
        suffix[static_cast<std::size_t>(i)] =
            suffix[static_cast<std::size_t>(i + 1)] + choose[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])][static_cast<std::size_t>(i)];

      for (int p = 0; p < k; ++p) {
        const int u = elems[static_cast<std::size_t>(p)];
        const VertexMask prev_set = s & ~bit(u);
        const std::size_t prev_rank = prefix[static_cast<std::size_t>(p)] + suffix[static_cast<std::size_t>(p + 1)];
        Count sum = 0;
        for_each_vertex(adj[static_cast<std::size_t>(u)] & prev_set, [&](int v) {
          const int pos = popcount(prev_set & full_mask(v));
          sum += previous[prev_rank * static_cast<std::size_t>(k - 1) + static_cast<std::size_t>(pos)];
        });
        layer[rank * static_cast<std::size_t>(k) + static_cast<std::size_t>(p)] = sum;
      }
      if (k == m) break;
      // Gosper's hack: next larger integer with the same popcount.
      const VertexMask c = s & (~s + 1);
      const VertexMask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
    previous = std::move(layer);
  }

  Count closed = 0;
  for (int p = 0; p < m; ++p)
    if ((root_adj >> p) & 1U) closed += previous[static_cast<std::size_t>(p)];
  return closed;
}

class MatchingCounter {
 public:
  explicit MatchingCounter(const Graph& g) : g_(g) {}

  u128 count(VertexMask uncovered) {
    if (uncovered == 0) return 1;
    if (auto it = memo_.find(uncovered); it != memo_.end()) return it->second;
    const int v = lowest(uncovered);
    const VertexMask rest = uncovered & ~bit(v);
    u128 total = 0;
    for_each_vertex(g_.neighbors(v) & rest, [&](int u) { total += count(rest & ~bit(u)); });
    if (memo_.size() < kMemoLimit) memo_.emplace(uncovered, total);
    return total;
  }

 private:
  static constexpr std::size_t kMemoLimit = std::size_t{1} << 22;
  const Graph& g_;
  std::unordered_map<VertexMask, u128> memo_;
};

bool is_hamilton_cycle(const Graph& g, const std::vector<int>& cycle) {
  const int n = g.n();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  VertexMask seen = 0;
  for (int v : cycle) {
    if (v < 0 || v >= n || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % n)])) return false;
  return true;
}

}  // namespace

int TwoFactor::cycle_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [](const auto& c) { return c.size() >= 3; }));
}

std::vector<Edge> TwoFactor::edge_set() const {
  std::vector<Edge> out;
  for (const auto& c : components) {
    if (c.size() == 2) {
      out.push_back(Edge::normalized(c[0], c[1]));
      continue;
    }
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back(Edge::normalized(c[i], c[(i + 1) % c.size()]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
  if (cycle.size() <= 2) {
    std::sort(cycle.begin(), cycle.end());
    return cycle;
  }
  const auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

TwoFactor canonicalized(TwoFactor f) {
  for (auto& c : f.components) c = canonical_cycle(std::move(c));
  std::sort(f.components.begin(), f.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return f;
}

void validate_two_factor(const Graph& g, const TwoFactor& f) {
  VertexMask covered = 0;
  for (const auto& c : f.components) {
    if (c.size() < 2) bad_factor("component with fewer than two vertices");
    for (int v : c) {
      if (v < 0 || v >= g.n()) bad_factor("vertex " + std::to_string(v) + " out of range");
      if (covered & bit(v)) bad_factor("vertex " + std::to_string(v) + " appears twice");
      covered |= bit(v);
    }
    const std::size_t len = c.size();
    const std::size_t pairs = len == 2 ? 1 : len;
    for (std::size_t i = 0; i < pairs; ++i) {
      if (!g.adjacent(c[i], c[(i + 1) % len])) {
        bad_factor("pair " + std::to_string(c[i]) + "," + std::to_string(c[(i + 1) % len]) + " is not an edge");
      }
    }
  }
  if (covered != full_mask(g.n())) bad_factor("components do not cover every vertex");
}

void enumerate_two_factors(const Graph& g, const TwoFactorVisitor& visit, const SizeCaps& caps) {
  require_cap(g.n(), caps.two_factor_enumeration, "2-factor enumeration");
  FactorEnumerator(g, visit, {}, -1).run();
}

std::vector<TwoFactor> all_two_factors(const Graph& g, const SizeCaps& caps) {
  std::vector<TwoFactor> out;
  enumerate_two_factors(g, [&](const TwoFactor& f) { out.push_back(f); }, caps);
  return out;
}

void enumerate_hamilton_cycles(const Graph& g, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = g.n();
  if (n < 3) return;
  std::vector<int> path{0};
  std::function<void(VertexMask)> extend = [&](VertexMask available) {
    const int last = path.back();
    if (available == 0) {
      if (g.adjacent(last, 0) && path[1] < last) visit(path);
      return;
    }
    for_each_vertex(g.neighbors(last) & available, [&](int x) {
      path.push_back(x);
      extend(available & ~bit(x));
      path.pop_back();
    });
  };
  extend(full_mask(n) & ~bit(0));
}

FactorHistogram factor_histogram(const Graph& g, const SizeCaps& caps) {
  require_cap(g.n(), caps.two_factor_enumeration, "2-factor counting");
  const SubsetFactorTable table(g);
  const VertexMask all = full_mask(g.n());
  FactorHistogram h;
  for (int s = 1; s < table.slots(); ++s) {
    const std::uint64_t c = table.count(all, s);
    if (c == 0) continue;
    h.counts[s] = c;
    h.weighted_counts[s] = table.weighted(all, s);
    h.total += c;
    h.weighted_total += table.weighted(all, s);
  }
  return h;
}

BigInt weighted_cycle_cover_sum(const Graph& g, const SizeCaps& caps) {
  return factor_histogram(g, caps).weighted_total;
}

std::vector<std::uint64_t> induced_two_factor_counts(const Graph& g, const SizeCaps& caps) {
  require_cap(g.n(), caps.two_factor_enumeration, "2-factor counting");
  const SubsetFactorTable table(g);
  std::vector<std::uint64_t> out(std::size_t{1} << g.n());
  for (std::size_t mask = 1; mask < out.size(); ++mask) out[mask] = table.total(mask);
  return out;
}

BigInt hamilton_count_exact(const Graph& g, const SizeCaps& caps) {
  const int n = g.n();
  require_cap(n, caps.hamilton, "Hamilton cycle counting");
  if (n < 3) return 0;
  // Rooted path counts are at most maxdeg^(n-1).
  int max_degree = 0;
  for (int d : g.degrees()) max_degree = std::max(max_degree, d);
  const double log2_bound = (n - 1) * std::log2(std::max(1, max_degree));
  if (log2_bound < 63.0) return BigInt(hamilton_paths_closed<std::uint64_t>(g) / 2);
  return to_big(hamilton_paths_closed<u128>(g) / 2);
}

BigInt perfect_matching_count(const Graph& g, const SizeCaps& caps) {
  const int n = g.n();
  if (n % 2 != 0) throw Error(ErrorKind::OddN, "perfect matchings need even n");
  require_cap(n, caps.matching, "perfect matching counting");
  MatchingCounter counter(g);
  return to_big(counter.count(full_mask(n)));
}

PhiResult phi_with_witness(const Graph& g, int k, const SizeCaps& caps) {
  const int n = g.n();
  if (k < 2 || k > n) throw Error(ErrorKind::KOutOfRange, "phi needs 2 <= k <= n");
  require_cap(n, caps.phi, "phi");
  const auto counts = induced_two_factor_counts(g, caps);
  PhiResult best;
  bool found = false;
  std::uint64_t best_count = 0;
  for (std::size_t mask = 0; mask < counts.size(); ++mask) {
    if (popcount(mask) != k) continue;
    if (!found || counts[mask] > best_count) {
      best_count = counts[mask];
      best.maximizer = mask;
      found = true;
    }
  }
  best.value = best_count;
  return best;
}

BigInt phi(const Graph& g, int k, const SizeCaps& caps) { return phi_with_witness(g, k, caps).value; }

std::uint64_t two_factors_near_hamilton(const Graph& g, const TwoFactor& hamilton, int k, const SizeCaps& caps) {
  const int n = g.n();
  require_cap(n, caps.near_hamilton, "near-Hamilton 2-factor counting");
  if (k < 0 || k > 3) throw Error(ErrorKind::KOutOfRange, "distance k must be in [0, 3]");
  if (hamilton.components.size() != 1 || !is_hamilton_cycle(g, hamilton.components.front())) {
    throw Error(ErrorKind::NotAHamiltonCycle, "expected a single spanning cycle of g");
  }
  const auto& cycle = hamilton.components.front();
  std::vector<VertexMask> reference(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int u = cycle[static_cast<std::size_t>(i)];
    const int v = cycle[static_cast<std::size_t>((i + 1) % n)];
    reference[static_cast<std::size_t>(u)] |= bit(v);
    reference[static_cast<std::size_t>(v)] |= bit(u);
  }
  std::uint64_t count = 0;
  const TwoFactorVisitor tally = [&](const TwoFactor&) { ++count; };
  FactorEnumerator(g, tally, std::move(reference), k).run();
  return count;
}

}  // namespace ndl
