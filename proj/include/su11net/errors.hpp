#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace su11net {

namespace detail {
inline std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}
}  // namespace detail

// Thrown when a truncated number-basis state accumulates more probability in
// its top two occupation levels than the caller's guard allows.  The weight
// that tripped the guard is carried so callers can report it.
class truncation_overflow : public std::runtime_error {
public:
  truncation_overflow(double weight, double guard)
      : std::runtime_error("truncation overflow: top-level weight " +
                           detail::short_double(weight) + " exceeds guard " +
                           detail::short_double(guard)),
        weight_(weight) {}

  double weight() const noexcept { return weight_; }

private:
  double weight_;
};

// Thrown when a sensitivity estimate lands on a point where the signal slope
// vanishes and the error propagation ratio is meaningless.
class degenerate_slope : public std::runtime_error {
public:
  explicit degenerate_slope(double point)
      : std::runtime_error("signal slope vanishes at evaluation point " +
                           detail::short_double(point)),
        point_(point) {}

  double point() const noexcept { return point_; }

private:
  double point_;
};

}  // namespace su11net
