#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "starlag/common.hpp"
#include "starlag/detail/quadrature.hpp"

namespace starlag {

// Values of the Jacobi elliptic functions at one argument.
// Convention throughout: the parameter is m = k^2 (squared modulus).
struct EllipticTriple {
  double sn = 0.0;
  double cn = 1.0;
  double dn = 1.0;
};

// Complete elliptic integral of the first kind, K(m), by the
// arithmetic-geometric mean: K = pi / (2 agm(1, sqrt(1-m))).
inline double ellipk(double m) {
  if (m < 0.0 || m >= 1.0) throw std::domain_error("ellipk: parameter m outside [0, 1)");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

// sn, cn, dn by the descending Landen (AGM) recursion.
inline EllipticTriple ellipj(double u, double m) {
  if (m < 0.0 || m > 1.0) throw std::domain_error("ellipj: parameter m outside [0, 1]");
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1.0) {
    const double s = std::tanh(u);
    const double c = 1.0 / std::cosh(u);
    return {s, c, c};
  }

  double a[32], c[32];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (n + 1 < 32 && std::abs(c[n]) > 1e-17 * a[n]) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }

  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i >= 1; --i) {
    const double s = std::clamp(c[i] * std::sin(phi) / a[i], -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }

  EllipticTriple e;
  e.sn = std::sin(phi);
  e.cn = std::cos(phi);
  // The cos-ratio expression for dn degenerates to 0/0 at odd multiples of
  // K(m); the defining identity is well conditioned for m bounded away from 1.
  e.dn = std::sqrt(1.0 - m * e.sn * e.sn);
  assert(std::abs(e.sn * e.sn + e.cn * e.cn - 1.0) < 1e-12);
  assert(std::abs(e.dn * e.dn + m * e.sn * e.sn - 1.0) < 1e-12);
  return e;
}

namespace detail {

// Quarter period of sn(., m = 1/2); the lemniscate kernels below reduce
// their imaginary-modulus argument to sqrt(2) t with this parameter.
inline double lemniscate_quarter_period() {
  static const double k = ellipk(0.5);
  return k;
}

inline EllipticTriple lemniscate_triple(double t) {
  const double quarter = lemniscate_quarter_period();
  const double period = 4.0 * quarter;
  double u = std::sqrt(2.0) * t;
  u -= period * std::floor(u / period);
  return ellipj(u, 0.5);
}

}  // namespace detail

// Full period of the lemniscate radius r(t) below: 2 sqrt(2) K(1/2).
inline double lemniscate_period() {
  return 2.0 * std::sqrt(2.0) * detail::lemniscate_quarter_period();
}

// r(t) = sn(t, i), written through real-modulus functions as
// sn(sqrt2 t | 1/2) / (sqrt2 dn(sqrt2 t | 1/2)). Solves r'^2 + r^4 = 1.
inline double sn_imag_unit(double t) {
  const auto e = detail::lemniscate_triple(t);
  return e.sn / (std::sqrt(2.0) * e.dn);
}

// r'(t) = cd(sqrt2 t) nd(sqrt2 t) at parameter 1/2.
inline double sn_imag_unit_derivative(double t) {
  const auto e = detail::lemniscate_triple(t);
  return e.cn / (e.dn * e.dn);
}

// theta(t) = integral of r, in the closed arctangent form
// -arctan((1 + cn)/(1 - cn)); atan2 keeps the branch continuous where
// cn passes through 1. theta(0+) = -pi/2 and theta is periodic.
inline double lemniscate_angle(double t) {
  const auto e = detail::lemniscate_triple(t);
  return -std::atan2(1.0 + e.cn, 1.0 - e.cn);
}

}  // namespace starlag
