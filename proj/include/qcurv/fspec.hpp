#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcurv/constants.hpp"
#include "qcurv/geometry.hpp"
#include "qcurv/util.hpp"

namespace qcurv {

/// Prescribed function on S^n, given as a polynomial in the ambient
/// coordinates x_1..x_{n+1}.  Restricting to polynomials keeps every
/// derived quantity (gradients, Hessians, sphere averages) exactly
/// computable, which the hypothesis checks and obstruction tests rely on.
struct FSpec {
  struct Term {
    std::vector<int> alpha;  // exponent per coordinate, size n+1
    double coef = 0;
  };
  int ambient_dim = 0;  // n+1
  std::vector<Term> terms;

  static FSpec constant(int n, double c) {
    FSpec f;
    f.ambient_dim = n + 1;
    f.terms.push_back({std::vector<int>(n + 1, 0), c});
    return f;
  }

  FSpec& add_term(const std::vector<int>& alpha, double coef) {
    if (int(alpha.size()) != ambient_dim)
      throw std::invalid_argument("FSpec: bad multi-index length");
    terms.push_back({alpha, coef});
    return *this;
  }

  int degree() const {
    int d = 0;
    for (const auto& t : terms)
      d = std::max(d, std::accumulate(t.alpha.begin(), t.alpha.end(), 0));
    return d;
  }

  double eval(const Vec& x) const {
    double s = 0;
    for (const auto& t : terms) {
      double m = t.coef;
      for (int i = 0; i < ambient_dim; ++i)
        for (int e = 0; e < t.alpha[i]; ++e) m *= x[i];
      s += m;
    }
    return s;
  }

  /// Ambient gradient.
  Vec grad(const Vec& x) const {
    Vec g = Vec::Zero(ambient_dim);
    for (const auto& t : terms)
      for (int i = 0; i < ambient_dim; ++i) {
        if (t.alpha[i] == 0) continue;
        double m = t.coef * t.alpha[i];
        for (int j = 0; j < ambient_dim; ++j) {
          const int e = t.alpha[j] - (j == i ? 1 : 0);
          for (int k = 0; k < e; ++k) m *= x[j];
        }
        g[i] += m;
      }
    return g;
  }

  /// Ambient Hessian.
  Mat hess(const Vec& x) const {
    Mat H = Mat::Zero(ambient_dim, ambient_dim);
    for (const auto& t : terms)
      for (int i = 0; i < ambient_dim; ++i) {
        if (t.alpha[i] == 0) continue;
        for (int j = 0; j < ambient_dim; ++j) {
          const int aj = t.alpha[j] - (j == i ? 1 : 0);
          if (aj == 0) continue;
          double m = t.coef * t.alpha[i] * aj;
          for (int k = 0; k < ambient_dim; ++k) {
            int e = t.alpha[k] - (k == i ? 1 : 0) - (k == j ? 1 : 0);
            for (int q = 0; q < e; ++q) m *= x[k];
          }
          H(i, j) += m;
        }
      }
    return H;
  }

  /// Tangential (intrinsic) gradient at x on S^n.
  Vec grad_tan(const Vec& x) const {
    const Vec g = grad(x);
    return g - g.dot(x) * x;
  }

  /// Laplace-Beltrami of the restriction, geometer's sign (positive on
  /// first harmonics: for f = x_i this returns n x_i).
  double laplacian_sphere(const Vec& x) const {
    const Vec g = grad(x);
    const Mat H = hess(x);
    const int n = ambient_dim - 1;
    double tr = H.trace();
    return x.dot(H * x) + n * x.dot(g) - tr;
  }

  /// f composed with the dilation phi_{P,t}, evaluated pointwise.
  double eval_pulled(const Vec& P, double t, const Vec& x) const {
    return eval(conformal_map(P, t, x));
  }

  /// Chart data at P for the projection through -P (P at the chart origin):
  /// Euclidean gradient and Laplacian of f-tilde(w) = f(chart^{-1}(w)) at
  /// w = 0, expressed in the frame of `chart`.  These drive the large-t
  /// expansion of the center-of-mass map.
  struct ChartData {
    Vec grad;        // in chart frame coordinates, size n
    double lap = 0;  // Euclidean chart Laplacian at 0
  };
  ChartData chart_data(const StereoChart& chart_at_minus_P) const {
    const StereoChart& ch = chart_at_minus_P;
    const Vec P = -ch.pole;
    const Vec g = grad(P);
    const Mat H = hess(P);
    const int n = ambient_dim - 1;
    ChartData out;
    // chart^{-1}(w) = P + 2 F w - 2|w|^2 P + O(|w|^3)
    out.grad = 2.0 * (ch.frame.transpose() * g);
    double tr_tan = 0;
    for (int i = 0; i < n; ++i) tr_tan += ch.frame.col(i).dot(H * ch.frame.col(i));
    out.lap = 4.0 * (tr_tan - n * P.dot(g));
    return out;
  }

  /// True when every term involves only coordinate `axis` (so the function
  /// is a univariate polynomial in mu = x . e_axis and hence rotationally
  /// symmetric about that axis).
  bool univariate_in(int axis) const {
    for (const auto& t : terms)
      for (int i = 0; i < ambient_dim; ++i)
        if (i != axis && t.alpha[i] != 0) return false;
    return true;
  }
  /// Index of the symmetry axis if univariate, else -1.
  int symmetry_axis() const {
    for (int a = 0; a < ambient_dim; ++a)
      if (univariate_in(a)) return a;
    return -1;
  }
  /// Coefficients of f as a univariate polynomial in mu (requires
  /// univariate_in(axis)).
  std::vector<double> mu_poly(int axis) const {
    if (!univariate_in(axis))
      throw std::invalid_argument("FSpec: not univariate in requested axis");
    std::vector<double> c;
    for (const auto& t : terms) {
      const int d = t.alpha[axis];
      if (int(c.size()) <= d) c.resize(d + 1, 0.0);
      c[d] += t.coef;
    }
    return c;
  }
};

/// Named perturbation families used by the command-line presets and tests.
namespace presets {

/// f = f0 (constant round-sphere invariant).
inline FSpec constant_f0(const Dimension& dim) {
  return FSpec::constant(dim.n, dim.f0);
}

/// f = f0 (1 + eps x_axis): the Kazdan-Warner obstructed family.
inline FSpec linear(const Dimension& dim, double eps, int axis = 0) {
  FSpec f = FSpec::constant(dim.n, dim.f0);
  std::vector<int> a(dim.n + 1, 0);
  a[axis] = 1;
  f.add_term(a, dim.f0 * eps);
  return f;
}

/// f = f0 (1 + eps (x_axis^2 - 1/(n+1))): axisymmetric, even, with maxima at
/// the two poles of the axis.
inline FSpec zonal_quadratic(const Dimension& dim, double eps, int axis = -1) {
  if (axis < 0) axis = dim.n;
  FSpec f = FSpec::constant(dim.n, dim.f0 * (1 - eps / (dim.n + 1)));
  std::vector<int> a(dim.n + 1, 0);
  a[axis] = 2;
  f.add_term(a, dim.f0 * eps);
  return f;
}

/// f = f0 (1 + eps (mu^3 - 3 mu/(n+3))): the zonal degree-3 harmonic.
inline FSpec zonal_cubic(const Dimension& dim, double eps, int axis = -1) {
  if (axis < 0) axis = dim.n;
  FSpec f = FSpec::constant(dim.n, dim.f0);
  std::vector<int> a1(dim.n + 1, 0), a3(dim.n + 1, 0);
  a1[axis] = 1;
  a3[axis] = 3;
  f.add_term(a3, dim.f0 * eps);
  f.add_term(a1, -dim.f0 * eps * 3.0 / (dim.n + 3));
  return f;
}

/// f = f0 (1 + eps sum_i a_i x_i^2) with distinct a_i in (-1, 1): a Morse
/// function whose critical points are exactly the +/- coordinate axes.  The
/// a_i come from the Weyl sequence frac(k sqrt 2), which keeps them pairwise
/// distinct and keeps each one away from their mean, so the sphere Laplacian
/// is nonzero at every critical point.
inline FSpec generic_quadratic(const Dimension& dim, double eps) {
  FSpec f = FSpec::constant(dim.n, dim.f0);
  for (int i = 0; i <= dim.n; ++i) {
    std::vector<int> a(dim.n + 1, 0);
    a[i] = 2;
    const double s = (i + 1) * std::sqrt(2.0);
    const double ai = 2.0 * (s - std::floor(s)) - 1.0;
    f.add_term(a, dim.f0 * eps * ai);
  }
  return f;
}

}  // namespace presets

}  // namespace qcurv
