#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcurv {

/// Dimension-derived constants for the fourth-order conformal operator on
/// the round sphere S^n, n >= 5.
///
/// All integrals in this library are volume-normalized averages over S^n,
/// and every constant below is stated in that convention.  In particular
/// the operator is
///
///     P u = Lap^2 u + c_n Lap u + d_n u
///
/// with the geometer's sign for the Laplace-Beltrami operator (Lap is
/// positive semidefinite, Lap x_i = n x_i for the coordinate restrictions).
struct Dimension {
  int n = 0;
  double c_n = 0;        // (n^2 - 2n - 4) / 2
  double d_n = 0;        // (n-4) n (n^2-4) / 16
  double two_sharp = 0;  // critical exponent 2n / (n-4)
  double f0 = 0;         // n (n^2-4) / 8, the invariant of the round metric
  double omega_n = 0;    // volume of the unit n-sphere
  // Sharp Sobolev threshold in the normalized-average convention; equals
  // d_n (the best constant is attained by constants).  Stored separately so
  // the identity can be asserted rather than assumed.
  double k0_inv_scaled = 0;

  double lambda(int k) const { return double(k) * (k + n - 1); }
};

inline Dimension make_dimension(int n) {
  if (n < 5)
    throw std::invalid_argument("make_dimension: need n >= 5, got " +
                                std::to_string(n));
  Dimension d;
  d.n = n;
  const double nn = n;
  d.c_n = 0.5 * (nn * nn - 2 * nn - 4);
  d.d_n = (nn - 4) / 16.0 * nn * (nn * nn - 4);
  d.two_sharp = 2 * nn / (nn - 4);
  d.f0 = nn * (nn * nn - 4) / 8.0;
  d.omega_n = 2.0 * std::pow(M_PI, (nn + 1) / 2) / std::tgamma((nn + 1) / 2);
  // Sharp-constant identity: pi^2 n(n-4)(n^2-4) (Gamma(n/2)/Gamma(n))^{4/n}
  // scaled by omega_n^{-4/n} collapses to d_n.  Evaluated through lgamma to
  // keep it exact to rounding for all n of interest.
  const double x = M_PI * M_PI * nn * (nn - 4) * (nn * nn - 4) *
                   std::exp(4.0 / nn * (std::lgamma(nn / 2) - std::lgamma(nn)));
  d.k0_inv_scaled = x * std::pow(d.omega_n, -4.0 / nn);
  return d;
}

/// Eigenvalue multiplier of the weighted operator a (Lap^2 + c_n Lap) + d_n
/// on spherical harmonics of degree k; a = 1 gives the full operator.
inline double paneitz_symbol(const Dimension& dim, int k, double a) {
  if (k < 0) throw std::invalid_argument("paneitz_symbol: k < 0");
  if (!(a > 0 && a <= 1))
    throw std::invalid_argument("paneitz_symbol: need 0 < a <= 1");
  const double lam = dim.lambda(k);
  return a * lam * lam + a * dim.c_n * lam + dim.d_n;
}

}  // namespace qcurv
