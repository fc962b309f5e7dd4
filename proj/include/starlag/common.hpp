#pragma once

#include <stdexcept>
#include <string>

namespace starlag {

// Failure of a numeric routine (quadrature breakdown, ODE step rejection,
// singular evaluation point). The tag identifies the subsystem that failed.
class NumericError : public std::runtime_error {
 public:
  NumericError(std::string tag, const std::string& what)
      : std::runtime_error(tag + ": " + what), tag_(std::move(tag)) {}

  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x, double slack = 1e-9) const {
    return x >= lo - slack && x <= hi + slack;
  }
};

}  // namespace starlag
