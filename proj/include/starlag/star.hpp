#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "starlag/common.hpp"
#include "starlag/curves.hpp"
#include "starlag/detail/quadrature.hpp"
#include "starlag/geom.hpp"

namespace starlag {

// Pointwise first/second order data of the surface Phi = alpha * omega.
struct SurfaceJet {
  C2Vector phi;            // position, base-point gauge
  C2Vector phi_t, phi_s;   // tangent vectors
  double E = 0, F = 0, G = 0;  // induced metric
  double conf = 0;         // |alpha|^2 + |omega|^2
  double C_ttt = 0, C_tts = 0, C_tss = 0, C_sss = 0;  // cubic tensor
  double beta = 0;         // Lagrangian angle, principal value
  C2Vector H;              // mean curvature vector
  bool singular = false;
};

struct SecondDerivatives {
  C2Vector phi_tt, phi_ts, phi_ss;
};

// The Lagrangian surface built from two planar curves. Positions are
// reported in the gauge where both prefix integrals vanish at the base
// point, i.e. the first slot is
//   (|omega(s)|^2 - |alpha(t)|^2)/2 + i (B(s) - A(t)),
// with A' = <alpha', J alpha>, B' = <omega', J omega>.
class StarSurface {
 public:
  static StarSurface build(PlanarCurve alpha, PlanarCurve omega, double t0 = 0.0,
                           double s0 = 0.0) {
    StarSurface s(std::move(alpha), std::move(omega), t0, s0);
    return s;
  }

  const PlanarCurve& alpha() const { return alpha_; }
  const PlanarCurve& omega() const { return omega_; }
  double t0() const { return t0_; }
  double s0() const { return s0_; }

  // A(t) = integral from t0 of <alpha', J alpha>.
  double prefix_alpha(double t) const { return table_a_->eval(t) - a0_; }
  // B(s) = integral from s0 of <omega', J omega>.
  double prefix_omega(double s) const { return table_b_->eval(s) - b0_; }

  bool is_singular(double t, double s) const {
    return std::abs(alpha_.eval(t).pos) < 1e-12 && std::abs(omega_.eval(s).pos) < 1e-12;
  }

  C2Vector position(double t, double s) const {
    const PlanePoint a = alpha_.eval(t).pos;
    const PlanePoint w = omega_.eval(s).pos;
    const Complex first{0.5 * (std::norm(w) - std::norm(a)),
                        prefix_omega(s) - prefix_alpha(t)};
    return {first, a * w};
  }

  SurfaceJet jet(double t, double s) const {
    const CurveJet a = alpha_.eval(t);
    const CurveJet w = omega_.eval(s);
    if (std::abs(a.pos) < 1e-12 && std::abs(w.pos) < 1e-12)
      throw NumericError("star", "jet requested at a singular point");

    SurfaceJet j;
    j.phi = position(t, s);
    j.phi_t = a.d1 * C2Vector{-std::conj(a.pos), w.pos};
    j.phi_s = w.d1 * C2Vector{std::conj(w.pos), a.pos};
    j.conf = std::norm(a.pos) + std::norm(w.pos);
    j.E = a.speed * a.speed * j.conf;
    j.G = w.speed * w.speed * j.conf;
    j.F = 0.0;

    const double ja = bracket_j(a.d1, a.pos);  // <alpha', J alpha>
    const double jw = bracket_j(w.d1, w.pos);  // <omega', J omega>
    j.C_ttt = a.speed * a.speed * (j.conf * a.speed * a.kappa - ja);
    j.C_tts = a.speed * a.speed * jw;
    j.C_tss = w.speed * w.speed * ja;
    j.C_sss = w.speed * w.speed * (j.conf * w.speed * w.kappa - jw);

    j.beta = std::arg(-a.d1 * w.d1);

    const Complex i{0.0, 1.0};
    j.H = (1.0 / j.conf) * ((a.kappa / a.speed) * (i * j.phi_t) +
                            (w.kappa / w.speed) * (i * j.phi_s));
    return j;
  }

  // Analytic second derivatives of the immersion (for oracle checks).
  SecondDerivatives second_derivatives(double t, double s) const {
    const CurveJet a = alpha_.eval(t);
    const CurveJet w = omega_.eval(s);
    SecondDerivatives d;
    d.phi_tt = {-a.d2 * std::conj(a.pos) - a.d1 * std::conj(a.d1), a.d2 * w.pos};
    d.phi_ts = {0.0, a.d1 * w.d1};
    d.phi_ss = {w.d2 * std::conj(w.pos) + w.d1 * std::conj(w.d1), w.d2 * a.pos};
    return d;
  }

  // Normal projection of the position vector:
  // phi^perp = [Im(phi, phi_t)/|phi_t|^2] J phi_t + [Im(phi, phi_s)/|phi_s|^2] J phi_s.
  C2Vector normal_project_position(double t, double s) const {
    const SurfaceJet j = jet(t, s);
    return project_normal(j, j.phi);
  }

  // Normal projection of a constant vector e.
  C2Vector normal_project_constant(double t, double s, const C2Vector& e) const {
    const SurfaceJet j = jet(t, s);
    return project_normal(j, e);
  }

 private:
  StarSurface(PlanarCurve alpha, PlanarCurve omega, double t0, double s0)
      : alpha_(std::move(alpha)), omega_(std::move(omega)), t0_(t0), s0_(s0) {
    table_a_ = make_table(alpha_);
    table_b_ = make_table(omega_);
    a0_ = table_a_->eval(t0);
    b0_ = table_b_->eval(s0);
  }

  static std::shared_ptr<PrefixTable<double>> make_table(const PlanarCurve& c) {
    Interval dom = c.domain();
    double hi = dom.hi;
    if (c.period()) hi += *c.period();  // one extra period for closure checks
    const int panels =
        std::clamp<int>(static_cast<int>(std::ceil((hi - dom.lo) / 0.01)), 64, 20000);
    return std::make_shared<PrefixTable<double>>(
        [c](double t) {
          const CurveJet j = c.eval(t);
          return bracket_j(j.d1, j.pos);
        },
        dom.lo, hi, panels);
  }

  static C2Vector project_normal(const SurfaceJet& j, const C2Vector& v) {
    const double ct = herm(v, j.phi_t).imag() / norm_sq(j.phi_t);
    const double cs = herm(v, j.phi_s).imag() / norm_sq(j.phi_s);
    return ct * jrot2(j.phi_t) + cs * jrot2(j.phi_s);
  }

  PlanarCurve alpha_;
  PlanarCurve omega_;
  double t0_, s0_;
  std::shared_ptr<PrefixTable<double>> table_a_, table_b_;
  double a0_ = 0.0, b0_ = 0.0;
};

}  // namespace starlag
