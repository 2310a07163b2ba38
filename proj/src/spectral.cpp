#include "ndl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "ndl/error.hpp"

namespace ndl {
namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = a[static_cast<std::size_t>(i * n + j)];
      sum += 2.0 * x * x;
    }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < kJacobiOffDiagonalTolerance) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation angle chosen so that the (p,q) entry vanishes; the
        // smaller root of t^2 + 2*theta*t - 1 = 0 keeps |angle| <= pi/4.
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eigenvalues(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eigenvalues[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
  return eigenvalues;
}

std::vector<double> spectrum(const Graph& g) {
  const int n = g.n();
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for_each_vertex(g.neighbors(i), [&](int j) { a[static_cast<std::size_t>(i * n + j)] = 1.0; });
  return symmetric_eigenvalues(std::move(a), n);
}

NdlCertificate certify(const Graph& g, double epsilon) {
  if (g.n() < 3) throw Error(ErrorKind::InvalidParameters, "certification needs n >= 3");
  const auto degree = g.regular_degree();
  if (!degree) throw Error(ErrorKind::NotRegular, "degree sequence is not constant");

  NdlCertificate cert;
  cert.n = g.n();
  cert.d = *degree;
  cert.epsilon = epsilon;
  cert.eigenvalues = spectrum(g);

  const double second = cert.eigenvalues[1];
  const double last = cert.eigenvalues.back();
  cert.lambda = std::min(static_cast<double>(cert.d), std::max(std::fabs(second), std::fabs(last)));
  // bipartite or disconnected: keep the ratio at exactly 1
  if (cert.lambda > static_cast<double>(cert.d) - kSpectralTolerance) cert.lambda = static_cast<double>(cert.d);
  cert.connected = second < static_cast<double>(cert.d) - kSpectralTolerance;

  const double log_n = std::log(static_cast<double>(cert.n));
  const double d = static_cast<double>(cert.d);
  cert.eigenvalue_ratio =
      cert.lambda > 0.0 ? d / cert.lambda : std::numeric_limits<double>::infinity();
  cert.cond1_margin = cert.eigenvalue_ratio / std::pow(log_n, 1.0 + epsilon);
  cert.cond2_ratio = std::log(d) * std::log(cert.eigenvalue_ratio) / log_n;
  return cert;
}

}  // namespace ndl
