#pragma once

#include <cstddef>
#include <vector>

namespace sftlab {

// Small dense square matrix, row-major.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct PerronResult {
  double value = 0.0;            // Perron eigenvalue
  std::vector<double> right;     // right eigenvector, 1-norm 1, nonnegative
  std::vector<double> left;      // left eigenvector, 1-norm 1, nonnegative
  int iterations = 0;
};

// Perron eigenvalue/eigenvectors of an irreducible nonnegative matrix by
// shifted power iteration; the final value is a two-sided Rayleigh quotient,
// so vector error enters only quadratically.
PerronResult perron_eigen(const Matrix& m, double rel_tol = 1e-12,
                          int max_iterations = 1000000);

// Stationary probability row vector of an irreducible stochastic matrix.
std::vector<double> stationary_distribution(const Matrix& transition,
                                            double rel_tol = 1e-13);

}  // namespace sftlab
