#include "sftlab/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace sftlab {

namespace {

double one_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::fabs(x);
  return s;
}

void normalize(std::vector<double>& v) {
  double s = one_norm(v);
  if (s <= 0.0) throw std::runtime_error("power iteration collapsed to zero vector");
  for (double& x : v) x /= s;
}

// v <- v * (M + shift I) or (M + shift I) * v
void apply(const Matrix& m, double shift, const std::vector<double>& v,
           std::vector<double>& out, bool transpose) {
  const int n = m.n;
  out.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double w = m.at(i, j);
      if (w == 0.0) continue;
      if (transpose)
        out[j] += w * v[i];
      else
        out[i] += w * v[j];
    }
  }
  for (int i = 0; i < n; ++i) out[i] += shift * v[i];
}

std::vector<double> power_vector(const Matrix& m, double shift, double rel_tol,
                                 int max_iterations, bool transpose, int& used) {
  const int n = m.n;
  std::vector<double> v(static_cast<std::size_t>(n), 1.0 / n);
  std::vector<double> next;
  for (used = 0; used < max_iterations; ++used) {
    apply(m, shift, v, next, transpose);
    normalize(next);
    double diff = 0.0;
    for (int i = 0; i < n; ++i) diff += std::fabs(next[i] - v[i]);
    v.swap(next);
    if (diff <= rel_tol) break;
  }
  return v;
}

}  // namespace

PerronResult perron_eigen(const Matrix& m, double rel_tol, int max_iterations) {
  if (m.n <= 0) throw std::invalid_argument("perron_eigen: empty matrix");
  for (double x : m.a)
    if (x < 0.0 || !std::isfinite(x))
      throw std::invalid_argument("perron_eigen: matrix must be nonnegative and finite");

  // A positive diagonal shift makes the iteration aperiodic.
  double max_row = 0.0;
  for (int i = 0; i < m.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.n; ++j) s += m.at(i, j);
    if (s > max_row) max_row = s;
  }
  if (max_row == 0.0) throw std::invalid_argument("perron_eigen: zero matrix");
  const double shift = 0.5 * max_row;

  PerronResult r;
  int it_r = 0, it_l = 0;
  r.right = power_vector(m, shift, rel_tol * 0.1, max_iterations, false, it_r);
  r.left = power_vector(m, shift, rel_tol * 0.1, max_iterations, true, it_l);
  r.iterations = it_r + it_l;

  // lambda = (l^T M r) / (l^T r)
  double num = 0.0, den = 0.0;
  for (int i = 0; i < m.n; ++i) {
    double row = 0.0;
    for (int j = 0; j < m.n; ++j) row += m.at(i, j) * r.right[j];
    num += r.left[i] * row;
    den += r.left[i] * r.right[i];
  }
  if (den <= 0.0) throw std::runtime_error("perron_eigen: eigenvector pairing degenerate");
  r.value = num / den;
  return r;
}

std::vector<double> stationary_distribution(const Matrix& transition, double rel_tol) {
  const int n = transition.n;
  std::vector<double> v(static_cast<std::size_t>(n), 1.0 / n);
  std::vector<double> next;
  for (int it = 0; it < 1000000; ++it) {
    // x <- 0.5 * (x + x P): lazy chain, converges for periodic P too
    apply(transition, 0.0, v, next, true);
    double diff = 0.0;
    for (int i = 0; i < n; ++i) {
      next[i] = 0.5 * (next[i] + v[i]);
      diff += std::fabs(next[i] - v[i]);
    }
    normalize(next);
    v.swap(next);
    if (diff <= rel_tol) break;
  }
  return v;
}

}  // namespace sftlab
