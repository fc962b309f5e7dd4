#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "starlag/common.hpp"

namespace starlag::detail {

// Piecewise quintic Hermite interpolant: value, first and second derivative
// are matched at every node, so the composite curve is C^2 and the local
// error is O(h^6) in the step size.
class HermiteTrack {
 public:
  void reserve(std::size_t n) {
    t_.reserve(n);
    f_.reserve(n);
    d_.reserve(n);
    s_.reserve(n);
  }

  void push(double t, double f, double d, double s) {
    t_.push_back(t);
    f_.push_back(f);
    d_.push_back(d);
    s_.push_back(s);
  }

  bool empty() const { return t_.empty(); }
  double front_time() const { return t_.front(); }
  double back_time() const { return t_.back(); }

  double eval(double t) const { return evaluate(t, 0); }
  double eval_d(double t) const { return evaluate(t, 1); }
  double eval_dd(double t) const { return evaluate(t, 2); }

 private:
  std::size_t locate(double t) const {
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    std::size_t j = (it == t_.begin()) ? 0 : (it - t_.begin() - 1);
    return std::min(j, t_.size() - 2);
  }

  double evaluate(double t, int deriv) const {
    if (t_.size() < 2) throw NumericError("ode", "dense output track too short");
    const double span = back_time() - front_time();
    if (t < front_time() - 1e-9 * span || t > back_time() + 1e-9 * span)
      throw NumericError("ode", "dense evaluation outside integrated span");
    t = std::clamp(t, front_time(), back_time());
    const std::size_t j = locate(t);
    const double h = t_[j + 1] - t_[j];
    const double x = (t - t_[j]) / h;

    // quintic Hermite bases and their scaled derivatives
    const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x;
    double b[6];
    if (deriv == 0) {
      b[0] = 1 - 10 * x3 + 15 * x4 - 6 * x5;
      b[1] = x - 6 * x3 + 8 * x4 - 3 * x5;
      b[2] = 0.5 * x2 - 1.5 * x3 + 1.5 * x4 - 0.5 * x5;
      b[3] = 10 * x3 - 15 * x4 + 6 * x5;
      b[4] = -4 * x3 + 7 * x4 - 3 * x5;
      b[5] = 0.5 * x3 - x4 + 0.5 * x5;
    } else if (deriv == 1) {
      b[0] = (-30 * x2 + 60 * x3 - 30 * x4) / h;
      b[1] = (1 - 18 * x2 + 32 * x3 - 15 * x4) / h;
      b[2] = (x - 4.5 * x2 + 6 * x3 - 2.5 * x4) / h;
      b[3] = (30 * x2 - 60 * x3 + 30 * x4) / h;
      b[4] = (-12 * x2 + 28 * x3 - 15 * x4) / h;
      b[5] = (1.5 * x2 - 4 * x3 + 2.5 * x4) / h;
    } else {
      const double h2 = h * h;
      b[0] = (-60 * x + 180 * x2 - 120 * x3) / h2;
      b[1] = (-36 * x + 96 * x2 - 60 * x3) / h2;
      b[2] = (1 - 9 * x + 18 * x2 - 10 * x3) / h2;
      b[3] = (60 * x - 180 * x2 + 120 * x3) / h2;
      b[4] = (-24 * x + 84 * x2 - 60 * x3) / h2;
      b[5] = (3 * x - 12 * x2 + 10 * x3) / h2;
    }
    return b[0] * f_[j] + b[1] * h * d_[j] + b[2] * h * h * s_[j] + b[3] * f_[j + 1] +
           b[4] * h * d_[j + 1] + b[5] * h * h * s_[j + 1];
  }

  std::vector<double> t_, f_, d_, s_;
};

struct Rk45Options {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  double h_init = 1e-3;
  double h_max = 0.05;
  double h_min = 1e-12;
  long max_steps = 2000000;
};

// Dormand-Prince 5(4) with PI step control. Calls on_node(t, y) at every
// accepted node, including the initial point.
template <std::size_t N, class Rhs, class Node>
void integrate_rk45(const Rhs& rhs, std::array<double, N> y, double t0, double t1,
                    const Rk45Options& opt, const Node& on_node) {
  using State = std::array<double, N>;
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640,
                          e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  auto axpy = [](State& out, const State& base, double h,
                 std::initializer_list<std::pair<double, const State*>> terms) {
    for (std::size_t i = 0; i < N; ++i) {
      double acc = base[i];
      for (const auto& [coef, k] : terms) acc += h * coef * (*k)[i];
      out[i] = acc;
    }
  };

  double t = t0;
  double h = std::min(opt.h_init, t1 - t0);
  State k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
  rhs(t, y, k1);
  on_node(t, y);
  double err_prev = 1.0;

  for (long step = 0; step < opt.max_steps; ++step) {
    if (t >= t1) return;
    h = std::min({h, opt.h_max, t1 - t});
    if (h < opt.h_min) throw NumericError("ode", "step size underflow");

    axpy(ytmp, y, h, {{a21, &k1}});
    rhs(t + c2 * h, ytmp, k2);
    axpy(ytmp, y, h, {{a31, &k1}, {a32, &k2}});
    rhs(t + c3 * h, ytmp, k3);
    axpy(ytmp, y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    rhs(t + c4 * h, ytmp, k4);
    axpy(ytmp, y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    rhs(t + c5 * h, ytmp, k5);
    axpy(ytmp, y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    rhs(t + h, ytmp, k6);
    axpy(ynew, y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    rhs(t + h, ynew, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double scale =
          opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err = std::max(err, std::abs(ei) / scale);
    }

    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;
      on_node(t, y);
      const double grow =
          0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      h *= std::clamp(grow, 0.2, 5.0);
      err_prev = std::max(err, 1e-10);
    } else {
      h *= std::clamp(0.9 * std::pow(err, -1.0 / 5.0), 0.1, 1.0);
    }
  }
  throw NumericError("ode", "step limit exceeded");
}

}  // namespace starlag::detail
