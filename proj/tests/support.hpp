#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "turan/error.hpp"
#include "turan/geometry.hpp"
#include "turan/polynomial.hpp"

namespace turan::test {

inline constexpr double kPi = std::numbers::pi;

inline double cross(Point o, Point a, Point b) {
  return (a - o).real() * (b - o).imag() - (a - o).imag() * (b - o).real();
}

/// Andrew's monotone chain; strictly convex, counterclockwise.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

/// Random convex polygon: jittered points on a circle, then their hull.
inline ConvexDomain random_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(3, 10);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi), jitter(-0.3, 0.3);
  for (;;) {
    const int k = count(rng);
    std::vector<Point> pts;
    for (int i = 0; i < k; ++i) pts.push_back(std::polar(1.0 + jitter(rng), angle(rng)));
    auto hull = convex_hull(pts);
    if (hull.size() < 3) continue;
    try {
      return ConvexDomain::polygon(hull);
    } catch (const InvalidInput&) {
    }
  }
}

inline ConvexDomain unit_square() { return ConvexDomain::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline ConvexDomain equilateral_triangle() {
  return ConvexDomain::polygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
}
inline ConvexDomain hexagon() { return ConvexDomain::regular_polygon(6, 1.0); }
inline ConvexDomain pentagon() { return ConvexDomain::regular_polygon(5, 1.0); }
inline ConvexDomain unit_disk() { return ConvexDomain::disk({0, 0}, 1.0); }
inline ConvexDomain ellipse_1_half() { return ConvexDomain::ellipse({0, 0}, 1.0, 0.5); }

struct NamedDomain {
  std::string name;
  ConvexDomain domain;
};

inline std::vector<NamedDomain> catalogue() {
  return {{"square", unit_square()},   {"triangle", equilateral_triangle()}, {"hexagon", hexagon()},
          {"pentagon", pentagon()},    {"disk", unit_disk()},                {"ellipse", ellipse_1_half()},
          {"shifted_disk", ConvexDomain::disk({0.3, -2.0}, 0.7)},
          {"rotated_ellipse", ConvexDomain::ellipse({1.0, 1.0}, 2.0, 0.6, 0.7)}};
}

/// Uniformly spread point of K: towards a random boundary point from the interior point.
inline Point random_point_in(const ConvexDomain& k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto& bd = k.boundary();
  const Point c = k.interior_point();
  const Point b = bd.point(bd.length() * unit(rng));
  return c + std::sqrt(unit(rng)) * (b - c);
}

/// Random p in P_n(K); roughly one zero in five sits on the boundary.
inline MonicPolynomial random_polynomial(const ConvexDomain& k, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ZeroSet z;
  for (int i = 0; i < n; ++i) {
    if (unit(rng) < 0.2) {
      z.push_back(k.boundary().point(k.boundary().length() * unit(rng)));
    } else {
      z.push_back(random_point_in(k, rng));
    }
  }
  return MonicPolynomial(z);
}

}  // namespace turan::test
