#pragma once

#include <cmath>
#include <memory>
#include <numbers>

#include "turan/geometry.hpp"

namespace turan::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double cross(Point u, Point v) { return u.real() * v.imag() - u.imag() * v.real(); }
inline double dot(Point u, Point v) { return u.real() * v.real() + u.imag() * v.imag(); }

/// Reduce an angle to (-pi, pi].
inline double wrap_pi(double a) {
  a = std::remainder(a, kTwoPi);
  return a <= -kPi ? a + kTwoPi : a;
}

/// Reduce t to [0, period).
inline double wrap_period(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0) r += period;
  return r >= period ? 0.0 : r;
}

/// Distance from z to the closed segment [a, b].
double point_segment_distance(Point z, Point a, Point b);
/// Nearest point of the closed segment [a, b] to z.
Point project_to_segment(Point z, Point a, Point b);

/// Largest s >= 0 with origin + s * direction in the polygon (direction unit).
double polygon_ray_exit(const Polygon& poly, Point origin, Point direction);
/// Same for an ellipse.
double ellipse_ray_exit(const Ellipse& e, Point origin, Point direction);

/// Ellipse local frame: z -> rotated/centered coordinates.
inline Point ellipse_local(const Ellipse& e, Point z) {
  return (z - e.center) * std::polar(1.0, -e.rotation);
}
inline Point ellipse_global(const Ellipse& e, Point w) {
  return e.center + w * std::polar(1.0, e.rotation);
}

std::shared_ptr<const BoundaryParametrization> make_boundary(const ConvexDomain::Shape& shape);

/// Exact maximum of a unimodal function on [lo, hi] by golden-section search.
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace turan::detail
