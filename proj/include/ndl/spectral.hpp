#pragma once

#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

// Cyclic Jacobi parameters for the dense symmetric eigensolver.
inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
// Slack used when comparing computed eigenvalues against d.
inline constexpr double kSpectralTolerance = 1e-8;

// Eigenvalues of a dense symmetric matrix (row-major, n*n), descending.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n);

// Adjacency spectrum of g, descending.
std::vector<double> spectrum(const Graph& g);

struct NdlCertificate {
  int n = 0;
  int d = 0;
  std::vector<double> eigenvalues;  // descending, length n
  double lambda = 0.0;              // max(|second|, |last|)
  double eigenvalue_ratio = 0.0;    // d / lambda; +inf when lambda == 0
  double cond1_margin = 0.0;        // (d/lambda) / (log n)^(1+epsilon)
  double cond2_ratio = 0.0;         // log d * log(d/lambda) / log n
  bool connected = false;
  double epsilon = 0.1;
};

// Throws Error(NotRegular) for irregular graphs and Error(InvalidParameters)
// when n < 3.
NdlCertificate certify(const Graph& g, double epsilon = 0.1);

}  // namespace ndl
