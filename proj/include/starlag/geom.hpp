#pragma once

#include <cmath>
#include <complex>

namespace starlag {

using Complex = std::complex<double>;

// A point of the plane, identified with a complex number (C == R^2).
using PlanePoint = Complex;

// +pi/2 rotation of the plane, i.e. multiplication by i.
inline PlanePoint jrot(PlanePoint p) { return {-p.imag(), p.real()}; }

// <a, J b> = Im(a conj(b)) = a_x b_y - a_y b_x.
// This bracket drives every curvature/angle formula of the construction.
inline double bracket_j(PlanePoint a, PlanePoint b) {
  return std::imag(a * std::conj(b));
}

// A vector of C^2 = C x C.
struct C2Vector {
  Complex z1{};
  Complex z2{};

  C2Vector operator+(const C2Vector& o) const { return {z1 + o.z1, z2 + o.z2}; }
  C2Vector operator-(const C2Vector& o) const { return {z1 - o.z1, z2 - o.z2}; }
  C2Vector operator-() const { return {-z1, -z2}; }
  C2Vector& operator+=(const C2Vector& o) {
    z1 += o.z1;
    z2 += o.z2;
    return *this;
  }
  C2Vector& operator-=(const C2Vector& o) {
    z1 -= o.z1;
    z2 -= o.z2;
    return *this;
  }
};

inline C2Vector operator*(double a, const C2Vector& v) { return {a * v.z1, a * v.z2}; }
inline C2Vector operator*(Complex a, const C2Vector& v) { return {a * v.z1, a * v.z2}; }

// Bilinear Hermitian product (z, w) = z1 conj(w1) + z2 conj(w2).
inline Complex herm(const C2Vector& z, const C2Vector& w) {
  return z.z1 * std::conj(w.z1) + z.z2 * std::conj(w.z2);
}

// Euclidean metric <z, w> = Re(z, w).
inline double euclid(const C2Vector& z, const C2Vector& w) { return herm(z, w).real(); }

// Kaehler two-form  omega(z, w) = -Im(z, w) = <Jz, w>.
inline double kaehler(const C2Vector& z, const C2Vector& w) { return -herm(z, w).imag(); }

// Complex structure J of C^2: multiplies both slots by i.
inline C2Vector jrot2(const C2Vector& v) {
  return {Complex(0.0, 1.0) * v.z1, Complex(0.0, 1.0) * v.z2};
}

inline double norm_sq(const C2Vector& v) { return std::norm(v.z1) + std::norm(v.z2); }
inline double norm(const C2Vector& v) { return std::sqrt(norm_sq(v)); }

}  // namespace starlag
