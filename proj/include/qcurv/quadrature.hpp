#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qcurv/util.hpp"

namespace qcurv {

/// One-dimensional Gauss rule for the weight (1 - x^2)^a on [-1, 1],
/// normalized so the weights sum to one.  This is the latitude measure of
/// S^m when a = (m-2)/2: for F depending only on mu = x_{m+1}, the
/// volume-normalized sphere average of F equals sum_i w_i F(mu_i).
struct Quad1D {
  Vec mu;  // nodes, ascending, symmetric about 0
  Vec w;   // positive, sum = 1
  int exactness = 0;  // exact for polynomial degree <= exactness
};

namespace detail {

// Monic recurrence coefficient b_k for the weight (1-x^2)^a:
// p_{k+1} = x p_k - b_k p_{k-1}.
inline double gegenbauer_b(double a, int k) {
  const double kk = k;
  return kk * (kk + 2 * a) / ((2 * kk + 2 * a + 1) * (2 * kk + 2 * a - 1));
}

// Values of the first K orthonormal polynomials at x (normalized measure,
// so e_0 = 1).
inline void orthonormal_values(double a, int K, double x, double* out) {
  double em1 = 0, e = 1;
  out[0] = 1;
  for (int k = 1; k < K; ++k) {
    const double bk = gegenbauer_b(a, k);
    const double bkm1 = k >= 2 ? gegenbauer_b(a, k - 1) : 0;
    const double enext = (x * e - std::sqrt(bkm1) * em1) / std::sqrt(bk);
    em1 = e;
    e = enext;
    out[k] = e;
  }
}

}  // namespace detail

inline Quad1D gauss_gegenbauer(double a, int K) {
  if (K < 1) throw std::invalid_argument("gauss_gegenbauer: K < 1");
  if (a <= -1) throw std::invalid_argument("gauss_gegenbauer: a <= -1");

  // Nodes are the eigenvalues of the (symmetric, zero-diagonal) Jacobi
  // matrix; weights come from the Christoffel function of the orthonormal
  // basis, which sums to one under the normalized measure.
  Vec diag = Vec::Zero(K), sub(K > 1 ? K - 1 : 0);
  for (int k = 1; k < K; ++k) sub[k - 1] = std::sqrt(detail::gegenbauer_b(a, k));
  Eigen::SelfAdjointEigenSolver<Mat> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_gegenbauer: tridiagonal QL failed");

  Quad1D q;
  q.mu = es.eigenvalues();
  std::sort(q.mu.data(), q.mu.data() + K);
  // Enforce the exact +/- symmetry of the rule so that odd moments vanish
  // to rounding.
  for (int i = 0; i < K / 2; ++i) {
    const double s = 0.5 * (q.mu[i] - q.mu[K - 1 - i]);
    q.mu[i] = s;
    q.mu[K - 1 - i] = -s;
  }
  if (K % 2 == 1) q.mu[K / 2] = 0;

  q.w.resize(K);
  std::vector<double> vals(K);
  for (int i = 0; i < K; ++i) {
    detail::orthonormal_values(a, K, q.mu[i], vals.data());
    double s = 0;
    for (int k = 0; k < K; ++k) s += vals[k] * vals[k];
    q.w[i] = 1.0 / s;
  }
  q.w /= q.w.sum();  // exact normalization of the degree-0 moment
  q.exactness = 2 * K - 1;
  return q;
}

/// Product quadrature on the unit sphere S^m in R^{m+1}, exact (to rounding)
/// for all polynomial restrictions of total degree <= `degree`.  Weights are
/// normalized averages.  Built recursively: a Gauss rule in the last
/// coordinate times a rule on the equatorial S^{m-1}.
struct SphereRule {
  Mat nodes;   // rows = points in R^{m+1}
  Vec w;       // sum = 1
  int degree = 0;
};

inline SphereRule sphere_rule(int m, int degree, std::size_t max_nodes = 4000000) {
  if (m < 1) throw std::invalid_argument("sphere_rule: m < 1");
  if (degree < 1) degree = 1;
  // Predicted node count, checked before any allocation.
  {
    double count = 2.0 * ((degree + 1 + 1) / 2);
    for (int j = 2; j <= m; ++j) count *= (degree + 2) / 2;
    if (count > double(max_nodes))
      throw std::runtime_error(
          "sphere_rule: node count " + std::to_string(std::size_t(count)) +
          " exceeds cap " + std::to_string(max_nodes) +
          " (dimension " + std::to_string(m) + ", degree " +
          std::to_string(degree) + ")");
  }
  SphereRule r;
  r.degree = degree;
  if (m == 1) {
    const int M = 2 * ((degree + 2) / 2);  // even count, antipodally symmetric
    r.nodes.resize(M, 2);
    r.w = Vec::Constant(M, 1.0 / M);
    for (int j = 0; j < M; ++j) {
      const double th = 2 * M_PI * j / M;
      r.nodes(j, 0) = std::cos(th);
      r.nodes(j, 1) = std::sin(th);
    }
    return r;
  }
  const int K = (degree + 2) / 2;  // 2K-1 >= degree
  const Quad1D lat = gauss_gegenbauer(0.5 * (m - 2), K);
  const SphereRule eq = sphere_rule(m - 1, degree, max_nodes);
  const Eigen::Index Me = eq.nodes.rows();
  r.nodes.resize(K * Me, m + 1);
  r.w.resize(K * Me);
  for (int i = 0; i < K; ++i) {
    const double mu = lat.mu[i];
    const double rad = std::sqrt(std::max(0.0, 1 - mu * mu));
    for (Eigen::Index j = 0; j < Me; ++j) {
      const Eigen::Index row = i * Me + j;
      r.nodes.block(row, 0, 1, m) = rad * eq.nodes.row(j);
      r.nodes(row, m) = mu;
      r.w[row] = lat.w[i] * eq.w[j];
    }
  }
  return r;
}

}  // namespace qcurv
