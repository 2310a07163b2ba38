#include "ndl/permanent.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "ndl/error.hpp"

namespace ndl {
namespace {

// Primes just below 2^61 for the modular fallback.
constexpr std::array<std::uint64_t, 4> kPrimes = {
    2305843009213693951ULL, 2305843009213693921ULL, 2305843009213693907ULL,
    2305843009213693723ULL};

std::vector<VertexMask> columns_of(const ZeroOneMatrix& m) {
  std::vector<VertexMask> cols(static_cast<std::size_t>(m.n()), 0);
  for (int i = 0; i < m.n(); ++i)
    for_each_vertex(m.row(i), [&](int j) { cols[static_cast<std::size_t>(j)] |= bit(i); });
  return cols;
}

// Row sums restricted to the column subset `subset`.
std::vector<int> row_sums_for(const ZeroOneMatrix& m, VertexMask subset) {
  std::vector<int> sums(static_cast<std::size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i) sums[static_cast<std::size_t>(i)] = popcount(m.row(i) & subset);
  return sums;
}

inline void apply_gray_step(std::uint64_t k, VertexMask& gray, std::vector<int>& sums,
                            const std::vector<VertexMask>& cols) {
  const int j = std::countr_zero(k);
  gray ^= bit(j);
  const int delta = ((gray >> j) & 1U) ? 1 : -1;
  for_each_vertex(cols[static_cast<std::size_t>(j)],
                  [&](int i) { sums[static_cast<std::size_t>(i)] += delta; });
}

// Sum over Gray-code indices k in [begin, end) of (-1)^(n-|S_k|) prod_i rowsum_i(S_k),
// exact in 128-bit arithmetic (caller guarantees no overflow).
i128 ryser_block_exact(const ZeroOneMatrix& m, const std::vector<VertexMask>& cols,
                       std::uint64_t begin, std::uint64_t end) {
  const int n = m.n();
  VertexMask gray = (begin - 1) ^ ((begin - 1) >> 1);
  std::vector<int> sums = row_sums_for(m, gray);
  i128 total = 0;
  for (std::uint64_t k = begin; k < end; ++k) {
    apply_gray_step(k, gray, sums, cols);
    i128 product = 1;
    for (int s : sums) {
      product *= s;
      if (product == 0) break;
    }
    if ((n - popcount(gray)) & 1) total -= product;
    else total += product;
  }
  return total;
}

// Same sum reduced modulo each of the first `count` primes.
std::array<std::uint64_t, kPrimes.size()> ryser_block_modular(
    const ZeroOneMatrix& m, const std::vector<VertexMask>& cols, std::uint64_t begin,
    std::uint64_t end, std::size_t count) {
  const int n = m.n();
  VertexMask gray = (begin - 1) ^ ((begin - 1) >> 1);
  std::vector<int> sums = row_sums_for(m, gray);
  std::array<std::uint64_t, kPrimes.size()> total{};
  for (std::uint64_t k = begin; k < end; ++k) {
    apply_gray_step(k, gray, sums, cols);
    if (std::find(sums.begin(), sums.end(), 0) != sums.end()) continue;
    const bool negative = (n - popcount(gray)) & 1;
    for (std::size_t p = 0; p < count; ++p) {
      const std::uint64_t mod = kPrimes[p];
      std::uint64_t product = 1;
      for (int s : sums) product = static_cast<std::uint64_t>(u128{product} * static_cast<std::uint64_t>(s) % mod);
      total[p] = negative ? (total[p] + mod - product) % mod : (total[p] + product) % mod;
    }
  }
  return total;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) result = static_cast<std::uint64_t>(u128{result} * base % mod);
    base = static_cast<std::uint64_t>(u128{base} * base % mod);
    exp >>= 1;
  }
  return result;
}

// Splits [1, 2^n) into `threads` contiguous blocks and runs `work` on each.
template <class Result, class Work>
std::vector<Result> run_blocks(int n, int threads, Work work) {
  const std::uint64_t last = std::uint64_t{1} << n;
  const std::uint64_t span = last - 1;
  const auto blocks = static_cast<std::uint64_t>(std::clamp<long long>(threads, 1, static_cast<long long>(span)));
  std::vector<Result> results(blocks);
  std::vector<std::thread> pool;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t begin = 1 + span * b / blocks;
    const std::uint64_t end = 1 + span * (b + 1) / blocks;
    if (blocks == 1) {
      results[b] = work(begin, end);
    } else {
      pool.emplace_back([&results, &work, b, begin, end] { results[b] = work(begin, end); });
    }
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

ZeroOneMatrix ZeroOneMatrix::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) throw Error(ErrorKind::InvalidParameters, "matrix larger than 64x64");
  ZeroOneMatrix m;
  m.n_ = n;
  for (VertexMask r : rows) {
    if (r & ~full_mask(n)) throw Error(ErrorKind::IndexOutOfRange, "row has bits beyond n");
    m.row_sums_.push_back(popcount(r));
  }
  m.rows_ = std::move(rows);
  return m;
}

ZeroOneMatrix ZeroOneMatrix::adjacency(const Graph& g) {
  return from_rows(std::vector<VertexMask>(g.rows().begin(), g.rows().end()));
}

ZeroOneMatrix ZeroOneMatrix::identity(int n) {
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = bit(i);
  return from_rows(std::move(rows));
}

ZeroOneMatrix ZeroOneMatrix::all_ones(int n) {
  return from_rows(std::vector<VertexMask>(static_cast<std::size_t>(n), full_mask(n)));
}

ZeroOneMatrix ZeroOneMatrix::permuted(std::span<const int> rows, std::span<const int> cols) const {
  std::vector<VertexMask> out(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    const VertexMask src = row(rows[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n_; ++j)
      if ((src >> cols[static_cast<std::size_t>(j)]) & 1U) out[static_cast<std::size_t>(i)] |= bit(j);
  }
  return from_rows(std::move(out));
}

BigInt permanent_exact(const ZeroOneMatrix& m, int threads, const SizeCaps& caps) {
  const int n = m.n();
  if (n > caps.permanent) {
    throw Error(ErrorKind::TooLarge, "exact permanent capped at n=" + std::to_string(caps.permanent));
  }
  if (n == 0) return 1;
  const auto& row_sums = m.row_sums();
  if (std::find(row_sums.begin(), row_sums.end(), 0) != row_sums.end()) return 0;

  const auto cols = columns_of(m);
  // Every subset product is at most prod_i r_i, and per(A) <= prod_i r_i.
  double log2_product = 0.0;
  for (int r : row_sums) log2_product += std::log2(static_cast<double>(r));

  if (log2_product + n + 2.0 < 126.0) {
    const auto parts = run_blocks<i128>(n, threads, [&](std::uint64_t b, std::uint64_t e) {
      return ryser_block_exact(m, cols, b, e);
    });
    i128 total = 0;
    for (i128 p : parts) total += p;
    return to_big(static_cast<u128>(total));
  }

  const std::size_t count = std::min(kPrimes.size(), static_cast<std::size_t>(std::ceil((log2_product + 2.0) / 60.0)));
  const auto parts = run_blocks<std::array<std::uint64_t, kPrimes.size()>>(
      n, threads, [&](std::uint64_t b, std::uint64_t e) { return ryser_block_modular(m, cols, b, e, count); });

  // Chinese remaindering; the permanent lies in [0, prod p).
  BigInt modulus = 1;
  BigInt value = 0;
  for (std::size_t p = 0; p < count; ++p) {
    const std::uint64_t mod = kPrimes[p];
    std::uint64_t residue = 0;
    for (const auto& part : parts) residue = (residue + part[p]) % mod;
    // value + modulus * t == residue (mod p)
    const std::uint64_t current = static_cast<std::uint64_t>(value % mod);
    const std::uint64_t mod_inv = pow_mod(static_cast<std::uint64_t>(modulus % mod), mod - 2, mod);
    const std::uint64_t t = static_cast<std::uint64_t>(u128{(residue + mod - current) % mod} * mod_inv % mod);
    value += modulus * t;
    modulus *= mod;
  }
  return value;
}

std::string_view to_string(BoundKind k) { return k == BoundKind::Lower ? "lower" : "upper"; }

std::string_view to_string(BoundSource s) {
  switch (s) {
    case BoundSource::Bregman: return "bregman";
    case BoundSource::VanDerWaerden: return "vdw";
    case BoundSource::VanDerWaerdenWeak: return "vdw-weak";
    case BoundSource::RegularUpper: return "regular-upper";
    case BoundSource::AlonFriedland: return "alon-friedland";
  }
  return "unknown";
}

double LogBound::exp_value() const { return zero ? 0.0 : std::exp(value); }

double log_factorial(double k) { return std::lgamma(k + 1.0); }

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// GCC flags the shift below with a spurious stringop warning.
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
double log_of(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  // Scale into double range before taking the logarithm.
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}
#pragma GCC diagnostic pop

LogBound bregman_bound(std::span<const int> row_sums) {
  LogBound b{0.0, BoundKind::Upper, BoundSource::Bregman, false};
  for (int r : row_sums) {
    if (r < 0) throw Error(ErrorKind::InvalidParameters, "negative row sum");
    if (r == 0) {
      b.zero = true;
      b.value = -std::numeric_limits<double>::infinity();
      return b;
    }
    b.value += log_factorial(r) / r;
  }
  return b;
}

std::vector<int> equal_split_row_sums(long long total, int n) {
  if (n <= 0 || total < 0) throw Error(ErrorKind::InvalidParameters, "equal split needs n > 0, total >= 0");
  std::vector<int> sums(static_cast<std::size_t>(n), static_cast<int>(total / n));
  const long long extra = total % n;
  for (long long i = 0; i < extra; ++i) ++sums[static_cast<std::size_t>(i)];
  return sums;
}

LogBound bregman_bound_equal_split(long long total, int n) {
  return bregman_bound(equal_split_row_sums(total, n));
}

LogBound vdw_lower(int n, int d) {
  if (d < 1 || d > n) throw Error(ErrorKind::InvalidParameters, "vdw_lower needs 1 <= d <= n");
  return {log_factorial(n) + n * std::log(static_cast<double>(d) / n), BoundKind::Lower,
          BoundSource::VanDerWaerden, false};
}

LogBound vdw_lower_weak(int n, int d) {
  if (d < 1 || d > n) throw Error(ErrorKind::InvalidParameters, "vdw_lower needs 1 <= d <= n");
  return {n * (std::log(static_cast<double>(d)) - 1.0), BoundKind::Lower,
          BoundSource::VanDerWaerdenWeak, false};
}

LogBound regular_upper(int n, int d) {
  if (d < 1 || n < 0) throw Error(ErrorKind::InvalidParameters, "regular_upper needs d >= 1");
  return {static_cast<double>(n) / d * log_factorial(d), BoundKind::Upper,
          BoundSource::RegularUpper, false};
}

LogBound alon_friedland_upper(int n, int d) {
  if (n % 2 != 0) throw Error(ErrorKind::OddN, "perfect matchings need even n");
  if (d < 1) throw Error(ErrorKind::InvalidParameters, "alon_friedland_upper needs d >= 1");
  return {static_cast<double>(n) / (2.0 * d) * log_factorial(d), BoundKind::Upper,
          BoundSource::AlonFriedland, false};
}

}  // namespace ndl
