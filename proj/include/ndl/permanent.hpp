#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ndl/bigint.hpp"
#include "ndl/graph.hpp"
#include "ndl/size_caps.hpp"

namespace ndl {

// Square 0-1 matrix with bitset rows (bit j of row i <=> a_ij = 1).
class ZeroOneMatrix {
 public:
  static ZeroOneMatrix from_rows(std::vector<VertexMask> rows);
  static ZeroOneMatrix adjacency(const Graph& g);
  static ZeroOneMatrix identity(int n);
  static ZeroOneMatrix all_ones(int n);

  int n() const { return n_; }
  VertexMask row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const VertexMask> rows() const { return rows_; }
  const std::vector<int>& row_sums() const { return row_sums_; }
  bool at(int i, int j) const { return (row(i) >> j) & 1U; }

  // Rows permuted by `rows`, columns by `cols` (new row i is old row rows[i]).
  ZeroOneMatrix permuted(std::span<const int> rows, std::span<const int> cols) const;

 private:
  int n_ = 0;
  std::vector<VertexMask> rows_;
  std::vector<int> row_sums_;
};

// Exact permanent by Ryser's inclusion-exclusion formula, visiting column
// subsets in Gray-code order. `threads` > 1 splits the subset range into
// contiguous blocks summed afterwards; the result does not depend on it.
// Throws Error(TooLarge) above caps.permanent.
BigInt permanent_exact(const ZeroOneMatrix& m, int threads = 1,
                       const SizeCaps& caps = SizeCaps::from_environment());

enum class BoundKind { Lower, Upper };
enum class BoundSource { Bregman, VanDerWaerden, VanDerWaerdenWeak, RegularUpper, AlonFriedland };

std::string_view to_string(BoundKind k);
std::string_view to_string(BoundSource s);

// A bound held as a natural logarithm. `zero` marks a bound whose value is
// exactly 0 (log = -inf), as for a matrix with an all-zero row.
struct LogBound {
  double value = 0.0;
  BoundKind kind = BoundKind::Upper;
  BoundSource source = BoundSource::Bregman;
  bool zero = false;

  double exp_value() const;
};

// sum_i log(r_i!) / r_i.
LogBound bregman_bound(std::span<const int> row_sums);
// Row sums summing to `total` over `n` rows, as equal as possible:
// total mod n rows get ceil(total/n), the rest floor(total/n).
std::vector<int> equal_split_row_sums(long long total, int n);
LogBound bregman_bound_equal_split(long long total, int n);

// log(n!) + n log(d/n): per(A) >= n!(d/n)^n for A the adjacency matrix of a
// d-regular graph (van der Waerden applied to A/d).
LogBound vdw_lower(int n, int d);
// n log(d/e), the weaker form (d/e)^n <= n!(d/n)^n.
LogBound vdw_lower_weak(int n, int d);
// (n/d) log(d!).
LogBound regular_upper(int n, int d);
// (n/(2d)) log(d!); throws Error(OddN) for odd n.
LogBound alon_friedland_upper(int n, int d);

// log(k!) via lgamma.
double log_factorial(double k);
double log_binomial(double n, double k);
// Natural log of a nonnegative integer (-inf for 0).
double log_of(const BigInt& x);

}  // namespace ndl
