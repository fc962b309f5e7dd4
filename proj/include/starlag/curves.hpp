#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starlag/common.hpp"
#include "starlag/detail/ode.hpp"
#include "starlag/detail/quadrature.hpp"
#include "starlag/geom.hpp"
#include "starlag/specfun.hpp"

namespace starlag {

// Pointwise data of a regular planar curve.
struct CurveJet {
  PlanePoint pos{};
  PlanePoint d1{};
  PlanePoint d2{};
  double speed = 0.0;  // |d1|
  double kappa = 0.0;  // signed curvature Im(conj(d1) d2) / speed^3
};

namespace detail {

inline CurveJet make_jet(PlanePoint pos, PlanePoint d1, PlanePoint d2) {
  CurveJet j;
  j.pos = pos;
  j.d1 = d1;
  j.d2 = d2;
  j.speed = std::abs(d1);
  if (j.speed < 1e-12) throw NumericError("curves", "vanishing tangent vector");
  j.kappa = std::imag(std::conj(d1) * d2) / (j.speed * j.speed * j.speed);
  return j;
}

class CurveModel {
 public:
  virtual ~CurveModel() = default;
  virtual CurveJet jet(double t) const = 0;

  // Derivative of the signed curvature with respect to the curve parameter.
  // Default: five-point stencil on the reported curvature.
  virtual double curvature_derivative(double t) const {
    const double h = 1e-4;
    return (-jet(t + 2 * h).kappa + 8 * jet(t + h).kappa - 8 * jet(t - h).kappa +
            jet(t - 2 * h).kappa) /
           (12 * h);
  }

  std::string kind;
  std::vector<double> params;
  Interval domain{};
  std::optional<double> period;
  bool ode_backed = false;
  double min_speed = 0.0;
  bool origin_crossing = false;

  void probe_regularity() {
    constexpr int kSamples = 512;
    double ms = std::numeric_limits<double>::infinity();
    double mp = std::numeric_limits<double>::infinity();
    double mp_arg = domain.lo;
    for (int i = 0; i <= kSamples; ++i) {
      const double t = domain.lo + domain.length() * i / kSamples;
      const CurveJet j = jet(t);
      ms = std::min(ms, j.speed);
      if (std::abs(j.pos) < mp) {
        mp = std::abs(j.pos);
        mp_arg = t;
      }
    }
    // refine the distance-to-origin minimum so transversal crossings between
    // samples are still detected
    const double h = domain.length() / kSamples;
    double a = std::max(domain.lo, mp_arg - h);
    double b = std::min(domain.hi, mp_arg + h);
    for (int i = 0; i < 80; ++i) {
      const double m1 = a + (b - a) / 3.0;
      const double m2 = b - (b - a) / 3.0;
      if (std::abs(jet(m1).pos) < std::abs(jet(m2).pos))
        b = m2;
      else
        a = m1;
    }
    mp = std::min(mp, std::abs(jet(0.5 * (a + b)).pos));
    min_speed = ms;
    origin_crossing = mp < 1e-9;
    if (ms < 1e-6) throw NumericError("curves", "curve is not regular on its domain");
  }
};

}  // namespace detail

// Immutable planar curve handle; construction happens through the factory
// functions below. Periodic kinds evaluate everywhere, aperiodic kinds are
// restricted to their integration/table domain.
class PlanarCurve {
 public:
  explicit PlanarCurve(std::shared_ptr<const detail::CurveModel> m) : model_(std::move(m)) {}

  CurveJet eval(double t) const {
    check_domain(t);
    return model_->jet(t);
  }

  double curvature_derivative(double t) const {
    check_domain(t);
    return model_->curvature_derivative(t);
  }

  const std::string& kind() const { return model_->kind; }
  const std::vector<double>& params() const { return model_->params; }
  Interval domain() const { return model_->domain; }
  std::optional<double> period() const { return model_->period; }
  bool ode_backed() const { return model_->ode_backed; }
  double min_speed() const { return model_->min_speed; }
  bool origin_crossing() const { return model_->origin_crossing; }

 private:
  void check_domain(double t) const {
    if (!model_->period && !model_->domain.contains(t, 1e-9 * (1.0 + model_->domain.length())))
      throw std::out_of_range("curve parameter outside domain for kind " + model_->kind);
  }

  std::shared_ptr<const detail::CurveModel> model_;
};

// Closure data of a curve with a declared period.
struct ClosureReport {
  double period = 0.0;
  double closure_integral = 0.0;  // integral of <alpha', J alpha> over one period
  double position_gap = 0.0;      // max |pos(t+T) - pos(t)| over samples
};

namespace detail {

class AnalyticCurveModel final : public CurveModel {
 public:
  using JetFn = std::function<CurveJet(double)>;
  using ScalarFn = std::function<double(double)>;

  AnalyticCurveModel(JetFn jet_fn, ScalarFn kprime) : jet_(std::move(jet_fn)), kprime_(std::move(kprime)) {}

  CurveJet jet(double t) const override { return jet_(t); }

  double curvature_derivative(double t) const override {
    if (kprime_) return kprime_(t);
    return CurveModel::curvature_derivative(t);
  }

 private:
  JetFn jet_;
  ScalarFn kprime_;
};

template <class Model, class... Args>
PlanarCurve finish(std::string kind, std::vector<double> params, Interval dom,
                   std::optional<double> period, bool ode, Args&&... args) {
  auto m = std::make_shared<Model>(std::forward<Args>(args)...);
  m->kind = std::move(kind);
  m->params = std::move(params);
  m->domain = dom;
  m->period = period;
  m->ode_backed = ode;
  m->probe_regularity();
  return PlanarCurve(m);
}

}  // namespace detail

// alpha(t) = t + i a.
inline PlanarCurve make_line(double a, Interval dom = {-50.0, 50.0}) {
  auto jet = [a](double t) {
    return detail::make_jet({t, a}, {1.0, 0.0}, {0.0, 0.0});
  };
  return detail::finish<detail::AnalyticCurveModel>("line", {a}, dom, std::nullopt, false,
                                                    jet, [](double) { return 0.0; });
}

// Arclength-parametrized circle c + R e^{i t / R}; curvature 1/R.
inline PlanarCurve make_circle(PlanePoint center, double radius) {
  if (radius <= 0) throw std::invalid_argument("circle radius must be positive");
  auto jet = [center, radius](double t) {
    const Complex e = std::polar(1.0, t / radius);
    return detail::make_jet(center + radius * e, Complex(0, 1) * e, -e / radius);
  };
  const double period = 2.0 * std::numbers::pi * radius;
  return detail::finish<detail::AnalyticCurveModel>(
      "circle", {center.real(), center.imag(), radius}, Interval{0.0, period}, period,
      false, jet, [](double) { return 0.0; });
}

// Angle-parametrized circle c + R e^{i t}; speed R, curvature 1/R.
inline PlanarCurve make_circle_angle(PlanePoint center, double radius) {
  if (radius <= 0) throw std::invalid_argument("circle radius must be positive");
  auto jet = [center, radius](double t) {
    const Complex e = std::polar(radius, t);
    return detail::make_jet(center + e, Complex(0, 1) * e, -e);
  };
  const double period = 2.0 * std::numbers::pi;
  return detail::finish<detail::AnalyticCurveModel>(
      "circle_angle", {center.real(), center.imag(), radius}, Interval{0.0, period},
      period, false, jet, [](double) { return 0.0; });
}

namespace detail {

inline double kappa_prime_from_d3(const CurveJet& j, PlanePoint d3) {
  const double sp = j.speed;
  return std::imag(std::conj(j.d1) * d3) / (sp * sp * sp) -
         3.0 * j.kappa * std::real(std::conj(j.d1) * j.d2) / (sp * sp);
}

}  // namespace detail

// Gerono figure-eight (1 + 2 cos t, 2 cos t sin t), period 2 pi.
inline PlanarCurve make_gerono() {
  auto raw = [](double t) {
    CurveJet j = detail::make_jet({1.0 + 2.0 * std::cos(t), std::sin(2.0 * t)},
                                  {-2.0 * std::sin(t), 2.0 * std::cos(2.0 * t)},
                                  {-2.0 * std::cos(t), -4.0 * std::sin(2.0 * t)});
    return j;
  };
  auto kprime = [raw](double t) {
    const PlanePoint d3{2.0 * std::sin(t), -8.0 * std::cos(2.0 * t)};
    return detail::kappa_prime_from_d3(raw(t), d3);
  };
  return detail::finish<detail::AnalyticCurveModel>(
      "gerono", {}, Interval{0.0, 2.0 * std::numbers::pi}, 2.0 * std::numbers::pi, false,
      raw, kprime);
}

// Lissajous curve (sin t, sin 2t), period 2 pi.
inline PlanarCurve make_lissajous() {
  auto raw = [](double t) {
    return detail::make_jet({std::sin(t), std::sin(2.0 * t)},
                            {std::cos(t), 2.0 * std::cos(2.0 * t)},
                            {-std::sin(t), -4.0 * std::sin(2.0 * t)});
  };
  auto kprime = [raw](double t) {
    const PlanePoint d3{-std::cos(t), -8.0 * std::cos(2.0 * t)};
    return detail::kappa_prime_from_d3(raw(t), d3);
  };
  return detail::finish<detail::AnalyticCurveModel>(
      "lissajous", {}, Interval{0.0, 2.0 * std::numbers::pi}, 2.0 * std::numbers::pi,
      false, raw, kprime);
}

// Bernoulli lemniscate in the polar form r e^{i theta} with r = sn(t, i),
// theta' = r. Unit speed, signed curvature 3 r(t), passes through the origin
// at half-period multiples.
inline PlanarCurve make_lemniscate() {
  auto raw = [](double t) {
    const double r = sn_imag_unit(t);
    const double rp = sn_imag_unit_derivative(t);
    const Complex e = std::polar(1.0, lemniscate_angle(t));
    const Complex d1 = Complex(rp, r * r) * e;
    const Complex d2 = 3.0 * r * Complex(-r * r, rp) * e;
    return detail::make_jet(r * e, d1, d2);
  };
  auto kprime = [](double t) { return 3.0 * sn_imag_unit_derivative(t); };
  const double T = lemniscate_period();
  return detail::finish<detail::AnalyticCurveModel>("lemniscate", {}, Interval{0.0, T}, T,
                                                    false, raw, kprime);
}

namespace detail {

// Unit-speed curve recovered from a prescribed curvature function through the
// tangent-angle integrals; positions and angles live in prefix tables.
class PrescribedCurvatureModel final : public CurveModel {
 public:
  PrescribedCurvatureModel(std::function<double(double)> kappa,
                           std::function<double(double)> kappa_prime, double t0,
                           double theta0, PlanePoint p0, Interval span, double step)
      : kappa_(std::move(kappa)), kappa_prime_(std::move(kappa_prime)) {
    const int panels =
        std::clamp<int>(static_cast<int>(std::ceil(span.length() / std::min(step, 0.02))),
                        64, 200000);
    theta_table_ = PrefixTable<double>(kappa_, span.lo, span.hi, panels);
    theta_offset_ = theta0 - theta_table_.eval(t0);
    auto tangent = [this](double x) {
      return std::polar(1.0, theta_offset_ + theta_table_.eval(x));
    };
    pos_table_ = PrefixTable<Complex>(tangent, span.lo, span.hi, panels);
    pos_offset_ = p0 - pos_table_.eval(t0);
  }

  double theta(double t) const { return theta_offset_ + theta_table_.eval(t); }

  CurveJet jet(double t) const override {
    const Complex d1 = std::polar(1.0, theta(t));
    const double k = kappa_(t);
    return make_jet(pos_offset_ + pos_table_.eval(t), d1, Complex(0, 1) * k * d1);
  }

  double curvature_derivative(double t) const override {
    if (kappa_prime_) return kappa_prime_(t);
    const double h = 1e-4;
    return (-kappa_(t + 2 * h) + 8 * kappa_(t + h) - 8 * kappa_(t - h) +
            kappa_(t - 2 * h)) /
           (12 * h);
  }

 private:
  std::function<double(double)> kappa_;
  std::function<double(double)> kappa_prime_;
  PrefixTable<double> theta_table_;
  PrefixTable<Complex> pos_table_;
  double theta_offset_ = 0.0;
  Complex pos_offset_{};
};

}  // namespace detail

// Unit-speed curve with prescribed signed curvature kappa(t), initial tangent
// angle theta0 and initial position p0 at parameter t0.
inline PlanarCurve curve_from_curvature(std::function<double(double)> kappa, double t0,
                                        double theta0, PlanePoint p0, Interval span,
                                        double step = 0.01,
                                        std::function<double(double)> kappa_prime = {}) {
  if (!(step > 0)) throw std::invalid_argument("curve_from_curvature: step must be > 0");
  if (!span.contains(t0)) throw std::invalid_argument("curve_from_curvature: t0 outside span");
  return detail::finish<detail::PrescribedCurvatureModel>(
      "curvature", {}, span, std::nullopt, false, std::move(kappa),
      std::move(kappa_prime), t0, theta0, p0, span, step);
}

// Cornu spiral: unit-speed curve with kappa(t) = a t starting at the origin.
inline PlanarCurve make_cornu(double a, Interval span) {
  return detail::finish<detail::PrescribedCurvatureModel>(
      "cornu", {a}, span, std::nullopt, false, [a](double t) { return a * t; },
      [a](double) { return a; }, 0.0, 0.0, PlanePoint{0.0, 0.0}, span, 0.01);
}

namespace detail {

// Radial curve r e^{i theta_p} integrated in the polar second-order form.
class RadialCurveModel final : public CurveModel {
 public:
  RadialCurveModel(double rho, double lambda, double r_init, double rp_init,
                   Interval span) {
    auto rhs = [rho, lambda](double t, const std::array<double, 3>& y,
                             std::array<double, 3>& dy) {
      const double r = y[0], rp = y[1];
      if (r < 1e-9)
        throw NumericError("curves", "radial curve reached r = 0 near t = " +
                                         std::to_string(t));
      double q = 1.0 - rp * rp;
      if (q < -1e-10)
        throw NumericError("curves", "turning point |r'| = 1 near t = " + std::to_string(t));
      q = std::max(q, 0.0);
      const double sq = std::sqrt(q);
      const double kappa = std::sqrt(std::max(rho * rho * r * r - lambda, 0.0));
      dy[0] = rp;
      dy[1] = q / r - sq * kappa;
      dy[2] = sq / r;
    };

    r_track_.reserve(1024);
    th_track_.reserve(1024);
    detail::Rk45Options opt;
    detail::integrate_rk45<3>(
        rhs, {r_init, rp_init, 0.0}, span.lo, span.hi, opt,
        [&](double t, const std::array<double, 3>& y) {
          std::array<double, 3> dy;
          rhs(t, y, dy);
          const double r = y[0], rp = y[1], rpp = dy[1];
          const double q = std::max(1.0 - rp * rp, 0.0);
          const double sq = std::sqrt(q);
          if (q < 1e-12)
            throw NumericError("curves",
                               "turning point |r'| = 1 near t = " + std::to_string(t));
          const double thp = sq / r;
          const double thpp = (-rp * rpp / sq * r - sq * rp) / (r * r);
          r_track_.push(t, r, rp, rpp);
          th_track_.push(t, y[2], thp, thpp);
        });
    rho_ = rho;
    lambda_ = lambda;
  }

  CurveJet jet(double t) const override {
    const double r = r_track_.eval(t);
    const double rp = r_track_.eval_d(t);
    const double rpp = r_track_.eval_dd(t);
    const double th = th_track_.eval(t);
    const double thp = th_track_.eval_d(t);
    const double thpp = th_track_.eval_dd(t);
    const Complex e = std::polar(1.0, th);
    const Complex d1 = Complex(rp, r * thp) * e;
    const Complex d2 = Complex(rpp - r * thp * thp, 2.0 * rp * thp + r * thpp) * e;
    return make_jet(r * e, d1, d2);
  }

  double curvature_derivative(double t) const override {
    const double r = r_track_.eval(t);
    const double rp = r_track_.eval_d(t);
    const double kappa = std::sqrt(std::max(rho_ * rho_ * r * r - lambda_, 0.0));
    if (kappa > 1e-9) return rho_ * rho_ * r * rp / kappa;
    return CurveModel::curvature_derivative(t);
  }

 private:
  detail::HermiteTrack r_track_, th_track_;
  double rho_ = 0.0, lambda_ = 0.0;
};

}  // namespace detail

// Unit-speed curve whose curvature satisfies kappa^2 = rho^2 r^2 - lambda with
// r = |alpha|; mu fixes the conserved first integral, which selects r'(t0)
// via 3 r sqrt(1 - r'^2) = (rho^2 r^2 - lambda)^{3/2} / rho^2 + mu.
inline PlanarCurve cmc_radial_curve(double rho, double lambda, double mu, double r_init,
                                    Interval span) {
  if (!(rho > 0)) throw std::invalid_argument("cmc_radial_curve: rho must be positive");
  if (!(r_init > 0)) throw std::invalid_argument("cmc_radial_curve: r_init must be positive");
  const double k2 = rho * rho * r_init * r_init - lambda;
  if (k2 < 0) throw std::invalid_argument("cmc_radial_curve: rho^2 r^2 - lambda < 0");
  const double g = (std::pow(k2, 1.5) / (rho * rho) + mu) / (3.0 * r_init);
  if (g < 0.0 || g > 1.0 + 1e-12)
    throw std::invalid_argument("cmc_radial_curve: first integral incompatible with |r'| <= 1");
  const double rp0 = std::sqrt(std::max(1.0 - g * g, 0.0));
  return detail::finish<detail::RadialCurveModel>("cmc_radial", {rho, lambda, mu, r_init},
                                                  span, std::nullopt, true, rho, lambda,
                                                  r_init, rp0, span);
}

namespace detail {

// Frenet-type models whose state tracks are (x, y, phi, kappa).
class FrenetTrackModel : public CurveModel {
 public:
  CurveJet jet(double t) const override {
    const Complex d1 = std::polar(1.0, phi_.eval(t));
    const double k = kappa_.eval(t);
    return make_jet({x_.eval(t), y_.eval(t)}, d1, Complex(0, 1) * k * d1);
  }

  double curvature_derivative(double t) const override { return kappa_.eval_d(t); }

 protected:
  detail::HermiteTrack x_, y_, phi_, kappa_;
};

class ElasticaModel final : public FrenetTrackModel {
 public:
  ElasticaModel(double lambda, double kappa0, double kappa0p, double theta0, PlanePoint p0,
                Interval span) {
    auto rhs = [lambda](double, const std::array<double, 5>& y, std::array<double, 5>& dy) {
      const double phi = y[2], k = y[3], kp = y[4];
      dy[0] = std::cos(phi);
      dy[1] = std::sin(phi);
      dy[2] = k;
      dy[3] = kp;
      dy[4] = 0.5 * (lambda * k - k * k * k);
    };
    detail::Rk45Options opt;
    opt.h_max = 0.05;
    detail::integrate_rk45<5>(
        rhs, {p0.real(), p0.imag(), theta0, kappa0, kappa0p}, span.lo, span.hi, opt,
        [&](double t, const std::array<double, 5>& y) {
          const double phi = y[2], k = y[3], kp = y[4];
          const double c = std::cos(phi), s = std::sin(phi);
          x_.push(t, y[0], c, -k * s);
          y_.push(t, y[1], s, k * c);
          phi_.push(t, phi, k, kp);
          kappa_.push(t, k, kp, 0.5 * (lambda * k - k * k * k));
        });
  }
};

class TranslatingCurveModel final : public FrenetTrackModel {
 public:
  TranslatingCurveModel(double rho, double theta, double side, PlanePoint z0, double phi0,
                        Interval span) {
    auto curv = [rho, theta, side](const Complex& z, double phi) {
      return side * rho * std::imag(std::polar(1.0, phi - theta) * std::conj(z));
    };
    auto rhs = [curv](double, const std::array<double, 3>& y, std::array<double, 3>& dy) {
      const Complex z{y[0], y[1]};
      const double k = curv(z, y[2]);
      dy[0] = std::cos(y[2]);
      dy[1] = std::sin(y[2]);
      dy[2] = k;
    };
    detail::Rk45Options opt;
    opt.h_max = 0.05;
    detail::integrate_rk45<3>(
        rhs, {z0.real(), z0.imag(), phi0}, span.lo, span.hi, opt,
        [&](double t, const std::array<double, 3>& y) {
          const Complex z{y[0], y[1]};
          const double phi = y[2];
          const double k = curv(z, phi);
          const Complex rot = std::polar(1.0, phi - theta);
          const double proj = std::real(rot * std::conj(z));
          const double kp = side * rho * (k * proj - std::sin(theta));
          const double kpp = side * rho * (kp * proj + k * std::cos(theta)) - k * k * k;
          const double c = std::cos(phi), s = std::sin(phi);
          x_.push(t, y[0], c, -k * s);
          y_.push(t, y[1], s, k * c);
          phi_.push(t, phi, k, kp);
          kappa_.push(t, k, kp, kpp);
        });
  }
};

}  // namespace detail

// Free/constrained elastic curve: curvature solves 2 k'' + k^3 - lambda k = 0.
inline PlanarCurve elastica_curve(double lambda, double kappa0, double kappa0_prime,
                                  Interval span, double theta0 = 0.0,
                                  PlanePoint p0 = {0.0, 0.0}) {
  return detail::finish<detail::ElasticaModel>("elastica", {lambda, kappa0, kappa0_prime},
                                               span, std::nullopt, true, lambda, kappa0,
                                               kappa0_prime, theta0, p0, span);
}

// Generatrix of a translating soliton with velocity (rho e^{i theta}, 0):
// kappa = side * rho * Im(e^{i(phi - theta)} conj(z)), side = +1 for the
// first factor curve and -1 for the second.
inline PlanarCurve translating_soliton_curve(double rho, double theta, double side,
                                             PlanePoint z0, double phi0, Interval span) {
  if (side != 1.0 && side != -1.0)
    throw std::invalid_argument("translating_soliton_curve: side must be +1 or -1");
  return detail::finish<detail::TranslatingCurveModel>(
      "translating", {rho, theta, side, z0.real(), z0.imag(), phi0}, span, std::nullopt,
      true, rho, theta, side, z0, phi0, span);
}

namespace detail {

class ArclengthModel final : public CurveModel {
 public:
  ArclengthModel(PlanarCurve inner) : inner_(std::move(inner)) {
    const Interval dom = inner_.domain();
    const int panels = std::clamp<int>(static_cast<int>(std::ceil(dom.length() / 0.005)),
                                       128, 400000);
    length_ = PrefixTable<double>([this](double t) { return inner_.eval(t).speed; },
                                  dom.lo, dom.hi, panels);
    total_ = length_.eval(dom.hi);
  }

  double total_length() const { return total_; }

  double parameter_at_length(double ell) const {
    if (inner_.period()) ell -= total_ * std::floor(ell / total_);
    ell = std::clamp(ell, 0.0, total_);
    const auto& nodes = length_.nodes();
    const auto& prefix = length_.prefix();
    auto it = std::upper_bound(prefix.begin(), prefix.end(), ell);
    std::size_t j = (it == prefix.begin()) ? 0 : (it - prefix.begin() - 1);
    j = std::min(j, prefix.size() - 2);
    double t = nodes[j];
    for (int i = 0; i < 60; ++i) {
      const double f = length_.eval(t) - ell;
      if (std::abs(f) < 1e-13 * (1.0 + std::abs(ell))) break;
      const double sp = inner_.eval(t).speed;
      t = std::clamp(t - f / sp, nodes[j], nodes[j + 1]);
    }
    return t;
  }

  CurveJet jet(double ell) const override {
    const double t = parameter_at_length(ell);
    const CurveJet j = inner_.eval(t);
    const double sp = j.speed;
    const double sp_prime = std::real(std::conj(j.d1) * j.d2) / sp;
    const PlanePoint d1 = j.d1 / sp;
    const PlanePoint d2 = j.d2 / (sp * sp) - j.d1 * (sp_prime / (sp * sp * sp));
    return make_jet(j.pos, d1, d2);
  }

  double curvature_derivative(double ell) const override {
    const double t = parameter_at_length(ell);
    return inner_.curvature_derivative(t) / inner_.eval(t).speed;
  }

 private:
  PlanarCurve inner_;
  PrefixTable<double> length_;
  double total_ = 0.0;
};

class ScaledModel final : public CurveModel {
 public:
  ScaledModel(PlanarCurve inner, double factor) : inner_(std::move(inner)), f_(factor) {}

  CurveJet jet(double t) const override {
    const CurveJet j = inner_.eval(t);
    return make_jet(f_ * j.pos, f_ * j.d1, f_ * j.d2);
  }

  double curvature_derivative(double t) const override {
    return inner_.curvature_derivative(t) / f_;
  }

 private:
  PlanarCurve inner_;
  double f_;
};

}  // namespace detail

// Reparametrize by arclength; jets transform through the inverse of the
// cumulative-length table.
inline PlanarCurve arclength_reparametrization(const PlanarCurve& curve) {
  auto m = std::make_shared<detail::ArclengthModel>(curve);
  m->kind = curve.kind();
  m->params = curve.params();
  m->domain = Interval{0.0, m->total_length()};
  if (curve.period()) m->period = m->total_length();
  m->ode_backed = curve.ode_backed();
  m->probe_regularity();
  return PlanarCurve(m);
}

// Returns the curve itself when it is already unit speed.
inline PlanarCurve ensure_unit_speed(const PlanarCurve& curve) {
  constexpr int kSamples = 64;
  const Interval dom = curve.domain();
  for (int i = 0; i <= kSamples; ++i) {
    const double t = dom.lo + dom.length() * i / kSamples;
    if (std::abs(curve.eval(t).speed - 1.0) > 1e-12) return arclength_reparametrization(curve);
  }
  return curve;
}

// Homothety rho * curve (same parameter).
inline PlanarCurve scale_curve(const PlanarCurve& curve, double factor) {
  if (!(factor > 0)) throw std::invalid_argument("scale_curve: factor must be positive");
  auto m = std::make_shared<detail::ScaledModel>(curve, factor);
  m->kind = "scaled_" + curve.kind();
  m->params = curve.params();
  m->domain = curve.domain();
  m->period = curve.period();
  m->ode_backed = curve.ode_backed();
  m->probe_regularity();
  return PlanarCurve(m);
}

// Period, closure integral of <alpha', J alpha>, and the positional gap over
// one declared period.
inline ClosureReport closure_report(const PlanarCurve& curve) {
  if (!curve.period())
    throw std::invalid_argument("closure_report: curve has no declared period");
  ClosureReport rep;
  rep.period = *curve.period();
  const double lo = curve.domain().lo;
  const PrefixTable<double> tbl(
      [&curve](double t) {
        const CurveJet j = curve.eval(t);
        return bracket_j(j.d1, j.pos);
      },
      lo, lo + rep.period, 1024);
  rep.closure_integral = tbl.eval(lo + rep.period);
  double gap = 0.0;
  for (int i = 0; i <= 128; ++i) {
    const double t = lo + rep.period * i / 128.0;
    gap = std::max(gap, std::abs(curve.eval(t + rep.period).pos - curve.eval(t).pos));
  }
  rep.position_gap = gap;
  return rep;
}

}  // namespace starlag
