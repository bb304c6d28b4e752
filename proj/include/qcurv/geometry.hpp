#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qcurv/util.hpp"

namespace qcurv {

/// Conformal transformations of the round sphere and their parametrization
/// by the open unit ball.
///
/// Conventions (used everywhere downstream):
///  * A transformation is labelled by a pole P in S^n and a dilation factor
///    t >= 1.  In the stereographic chart that projects *through* P (so P
///    sits at chart infinity and -P at the chart origin), the map is
///    y -> t y.  As t -> infinity the image of almost every point tends to
///    P, so f composed with the map tends to f(P) almost everywhere.
///  * The ball parameter is p = ((t-1)/t) P; p = 0 is the identity.
///  * Writing mu = x . P, the map acts only on mu and rescales the
///    orthogonal component:
///        D  = (1 - mu) + t^2 (1 + mu)
///        mu'= (t^2 (1 + mu) - (1 - mu)) / D
///        x' = (2t / D) (x - mu P) + mu' P
///    with conformal scale rho = 2t / D, so |det dphi| = rho^n.  Note
///    rho(P) = 1/t and rho(-P) = t: the Jacobian mass piles up at the
///    antipode -P while images concentrate at P.

inline void check_unit(const Vec& x, const char* who) {
  if (std::abs(x.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument(std::string(who) + ": point not on the sphere");
}

/// p in the open unit ball of R^{n+1} <-> (P, t) in S^n x [1, inf).
struct BallParam {
  Vec p;

  explicit BallParam(Vec p_) : p(std::move(p_)) {
    if (p.size() < 2 || p.norm() >= 1.0)
      throw std::invalid_argument("BallParam: need |p| < 1");
  }
  static BallParam from_pole(const Vec& P, double t) {
    check_unit(P, "BallParam");
    if (t < 1) throw std::invalid_argument("BallParam: need t >= 1");
    return BallParam(Vec(((t - 1) / t) * P));
  }
  static BallParam origin(int n) { return BallParam(Vec(Vec::Zero(n + 1))); }

  double t() const { return 1.0 / (1.0 - p.norm()); }
  /// Pole of the dilation.  At p = 0 every map below is the identity and
  /// independent of this choice; the last coordinate axis is returned as a
  /// canonical stand-in.
  Vec pole() const {
    const double r = p.norm();
    if (r == 0) {
      Vec e = Vec::Zero(p.size());
      e[p.size() - 1] = 1;
      return e;
    }
    return p / r;
  }
};

/// Image of x under the dilation with pole P and factor t (t > 0 is allowed;
/// t < 1 gives the inverse map with pole P).
inline Vec conformal_map(const Vec& P, double t, const Vec& x) {
  const double mu = x.dot(P);
  const double D = (1 - mu) + t * t * (1 + mu);
  const double mu_new = (t * t * (1 + mu) - (1 - mu)) / D;
  Vec out = (2 * t / D) * (x - mu * P) + mu_new * P;
  // The fixed points +/-P are exact by construction; renormalize away the
  // last few ulps elsewhere.
  out /= out.norm();
  return out;
}

inline Vec conformal_map(const BallParam& p, const Vec& x) {
  return conformal_map(p.pole(), p.t(), x);
}

/// Conformal scale rho with |det dphi_{P,t}| = rho^n.
inline double conformal_scale(const Vec& P, double t, const Vec& x) {
  const double mu = x.dot(P);
  return 2 * t / ((1 - mu) + t * t * (1 + mu));
}

inline double conformal_jacobian(const Vec& P, double t, const Vec& x, int n) {
  return std::pow(conformal_scale(P, t, x), n);
}

inline double conformal_jacobian(const BallParam& p, const Vec& x) {
  return conformal_jacobian(p.pole(), p.t(), x, int(x.size()) - 1);
}

/// Weighted pullback (T u)(x) = u(phi(x)) |det dphi|^{(n-4)/2n}(x), the
/// action under which the fourth-order equation is equivariant.
inline std::function<double(const Vec&)> pullback_T(
    const BallParam& p, std::function<double(const Vec&)> u) {
  const Vec P = p.pole();
  const double t = p.t();
  const int n = int(p.p.size()) - 1;
  const double ex = 0.5 * (n - 4);
  return [P, t, u = std::move(u), ex](const Vec& x) {
    return u(conformal_map(P, t, x)) * std::pow(conformal_scale(P, t, x), ex);
  };
}

/// Stereographic chart projecting through `pole`: the chart origin is the
/// antipode, the equator maps to |y| = 1 and the pole itself is the chart's
/// point at infinity.  `frame` holds n orthonormal tangent directions that
/// fix the identification of the chart plane with R^n.
struct StereoChart {
  Vec pole;
  Mat frame;  // (n+1) x n, columns orthonormal, all orthogonal to pole

  static StereoChart at(const Vec& pole) {
    check_unit(pole, "StereoChart");
    const int dim = int(pole.size());
    // Orthonormal completion by Householder: columns 2..dim of the
    // reflection mapping e_1 -> pole.
    Mat Q = Mat::Identity(dim, dim);
    Vec v = pole;
    v[0] -= (pole[0] >= 0 ? -1.0 : 1.0);  // reflect onto -/+ e_1, avoid cancellation
    const double vn2 = v.squaredNorm();
    if (vn2 > 1e-24) Q -= (2.0 / vn2) * v * v.transpose();
    if ((Q.col(0) + pole).norm() < 1e-8) Q = -Q;  // ensure Q e_1 = +pole
    StereoChart c;
    c.pole = pole;
    c.frame = Q.rightCols(dim - 1);
    return c;
  }

  /// x on S^n (x != pole) -> y in R^n.
  Vec project(const Vec& x) const {
    const double denom = 1 - x.dot(pole);
    if (denom < 1e-14)
      throw std::domain_error("StereoChart: projecting the pole itself");
    return (frame.transpose() * x) / denom;
  }

  /// y in R^n -> x on S^n.
  Vec invert(const Vec& y) const {
    const double r2 = y.squaredNorm();
    Vec x = (2.0 * (frame * y) + (r2 - 1) * pole) / (1 + r2);
    return x;
  }
};

}  // namespace qcurv
