#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <type_traits>
#include <vector>

#include "starlag/common.hpp"

namespace starlag {

namespace detail {

// 6-point Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr double kGlNode[3] = {0.2386191860831969, 0.6612093864662645,
                                      0.9324695142031521};
inline constexpr double kGlWeight[3] = {0.4679139345726910, 0.3607615730481386,
                                        0.1713244923791704};

template <class T, class F>
T gauss6(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T acc{};
  for (int i = 0; i < 3; ++i) {
    acc += kGlWeight[i] * (f(mid - half * kGlNode[i]) + f(mid + half * kGlNode[i]));
  }
  return half * acc;
}

}  // namespace detail

// Cumulative integral of a scalar or complex integrand, tabulated at uniform
// panel boundaries. prefix[j] holds the integral from lo to nodes[j]; values
// inside a panel come from a fresh partial-panel Gauss rule, so dense
// evaluation carries the full composite accuracy.
template <class T>
class PrefixTable {
 public:
  PrefixTable() = default;

  PrefixTable(std::function<T(double)> f, double a, double b, int panels)
      : f_(std::move(f)), order_(6) {
    if (!(a < b)) throw NumericError("quadrature", "empty integration range");
    if (panels < 1) throw NumericError("quadrature", "need at least one panel");
    nodes_.resize(panels + 1);
    prefix_.resize(panels + 1);
    const double h = (b - a) / panels;
    nodes_[0] = a;
    prefix_[0] = T{};
    for (int j = 0; j < panels; ++j) {
      nodes_[j + 1] = (j + 1 == panels) ? b : a + (j + 1) * h;
      prefix_[j + 1] = prefix_[j] + panel(nodes_[j], nodes_[j + 1]);
    }
  }

  // Integral from lo() to x.
  T eval(double x) const {
    if (!Interval{lo(), hi()}.contains(x, 1e-9 * (1.0 + hi() - lo())))
      throw NumericError("quadrature", "evaluation outside table range");
    x = std::clamp(x, lo(), hi());
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    std::size_t j = (it == nodes_.begin()) ? 0 : (it - nodes_.begin() - 1);
    j = std::min(j, nodes_.size() - 2);
    if (x == nodes_[j]) return prefix_[j];
    return prefix_[j] + panel(nodes_[j], x);
  }

  double lo() const { return nodes_.front(); }
  double hi() const { return nodes_.back(); }
  int order() const { return order_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<T>& prefix() const { return prefix_; }

 private:
  T panel(double a, double b) const {
    T value = detail::gauss6<T>(
        [this](double x) {
          T y = f_(x);
          if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(y)) throw NumericError("quadrature", "non-finite integrand");
          } else {
            if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
              throw NumericError("quadrature", "non-finite integrand");
          }
          return y;
        },
        a, b);
    return value;
  }

  std::function<T(double)> f_;
  std::vector<double> nodes_;
  std::vector<T> prefix_;
  int order_ = 6;
};

using QuadTable = PrefixTable<double>;

// Prefix table of f over [a, b] with n panels.
inline QuadTable cumulative_integral(std::function<double(double)> f, double a, double b,
                                     int n) {
  if (n < 2) throw NumericError("quadrature", "need n >= 2");
  return QuadTable(std::move(f), a, b, n);
}

}  // namespace starlag
