#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"
#include "turan/error.hpp"

namespace turan {

using namespace detail;

namespace detail {

Point project_to_segment(Point z, Point a, Point b) {
  const Point e = b - a;
  const double len2 = std::norm(e);
  if (len2 == 0.0) return a;
  const double s = std::clamp(dot(z - a, e) / len2, 0.0, 1.0);
  return a + s * e;
}

double point_segment_distance(Point z, Point a, Point b) {
  return std::abs(z - project_to_segment(z, a, b));
}

double polygon_ray_exit(const Polygon& poly, Point origin, Point direction) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const Point e = v[(k + 1) % n] - v[k];
    const Point normal = Point(e.imag(), -e.real()) / std::abs(e);  // outward for ccw
    const double rate = dot(normal, direction);
    if (rate <= 0.0) continue;
    const double slack = dot(normal, v[k] - origin);  // >= 0 inside
    best = std::min(best, slack / rate);
  }
  return std::max(0.0, best);
}

double ellipse_ray_exit(const Ellipse& e, Point origin, Point direction) {
  const Point p = ellipse_local(e, origin);
  const Point d = direction * std::polar(1.0, -e.rotation);
  const double a2 = e.a * e.a, b2 = e.b * e.b;
  const double qa = d.real() * d.real() / a2 + d.imag() * d.imag() / b2;
  const double qb = 2.0 * (p.real() * d.real() / a2 + p.imag() * d.imag() / b2);
  const double qc = p.real() * p.real() / a2 + p.imag() * p.imag() / b2 - 1.0;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc <= 0.0) return 0.0;
  // Larger root, written to avoid cancellation when origin is on the curve.
  const double sq = std::sqrt(disc);
  double root;
  if (qb < 0.0) {
    root = (-qb + sq) / (2.0 * qa);
  } else {
    const double denom = -qb - sq;
    root = denom == 0.0 ? 0.0 : 2.0 * qc / denom;
  }
  return std::max(0.0, root);
}

}  // namespace detail

ConvexDomain::ConvexDomain(Shape shape) : shape_(std::move(shape)), boundary_(make_boundary(shape_)) {}

ConvexDomain ConvexDomain::polygon(std::vector<Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw InvalidInput("polygon needs at least 3 vertices");
  for (const Point& p : vertices) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
      throw InvalidInput("polygon vertex is not finite");
  }
  int positive = 0, negative = 0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vertices[(i + 1) % n] - vertices[i];
    const Point e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    const double scale = std::abs(e0) * std::abs(e1);
    if (scale == 0.0) throw InvalidInput("polygon has repeated vertices");
    const double c = cross(e0, e1);
    if (c > 1e-12 * scale) {
      ++positive;
    } else if (c < -1e-12 * scale) {
      ++negative;
    }
    turning += std::atan2(c, dot(e0, e1));
  }
  if (negative == static_cast<int>(n)) throw InvalidInput("vertices not counterclockwise");
  if (positive + negative < static_cast<int>(n)) throw InvalidInput("polygon has three collinear vertices");
  if (negative > 0) throw InvalidInput("vertices not strictly convex");
  if (std::abs(turning - kTwoPi) > 1e-9) throw InvalidInput("polygon boundary is not simple");
  return ConvexDomain(Polygon{std::move(vertices)});
}

ConvexDomain ConvexDomain::disk(Point center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("disk radius must be positive");
  return ConvexDomain(Disk{center, radius});
}

ConvexDomain ConvexDomain::ellipse(Point center, double a, double b, double rotation) {
  if (!(b > 0.0) || !std::isfinite(a)) throw InvalidInput("ellipse semi-minor axis must be positive");
  if (!(b <= a)) throw InvalidInput("ellipse requires b <= a");
  return ConvexDomain(Ellipse{center, a, b, rotation});
}

ConvexDomain ConvexDomain::regular_polygon(int k, double side, Point center, double phase) {
  if (k < 3) throw InvalidInput("regular polygon needs k >= 3");
  if (!(side > 0.0)) throw InvalidInput("regular polygon side must be positive");
  const double circumradius = side / (2.0 * std::sin(kPi / k));
  std::vector<Point> v;
  v.reserve(k);
  for (int j = 0; j < k; ++j) v.push_back(center + std::polar(circumradius, phase + kTwoPi * j / k));
  return polygon(std::move(v));
}

std::string_view ConvexDomain::kind() const noexcept {
  switch (shape_.index()) {
    case 0: return "polygon";
    case 1: return "disk";
    default: return "ellipse";
  }
}

namespace {

bool polygon_inside(const Polygon& poly, Point z) {
  const auto& v = poly.vertices;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (cross(v[(k + 1) % v.size()] - v[k], z - v[k]) < 0.0) return false;
  }
  return true;
}

/// Nearest point on the ellipse curve (not the filled region), first quadrant
/// reduction plus bisection on the standard secular equation.
Point ellipse_curve_nearest(double a, double b, Point local) {
  const double sx = local.real() < 0 ? -1.0 : 1.0;
  const double sy = local.imag() < 0 ? -1.0 : 1.0;
  const double x0 = std::abs(local.real()), y0 = std::abs(local.imag());
  double x, y;
  if (y0 > 0.0) {
    if (x0 > 0.0) {
      auto g = [&](double t) {
        const double rx = a * x0 / (t + a * a), ry = b * y0 / (t + b * b);
        return rx * rx + ry * ry - 1.0;
      };
      double lo = -b * b + b * y0, hi = -b * b + std::hypot(a * x0, b * y0);
      for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (g(mid) > 0.0 ? lo : hi) = mid;
      }
      const double t = 0.5 * (lo + hi);
      x = a * a * x0 / (t + a * a);
      y = b * b * y0 / (t + b * b);
    } else {
      x = 0.0;
      y = b;
    }
  } else {
    const double lim = (a * a - b * b) / a;
    if (x0 < lim) {
      x = a * a * x0 / (a * a - b * b);
      y = b * std::sqrt(std::max(0.0, 1.0 - (x / a) * (x / a)));
    } else {
      x = a;
      y = 0.0;
    }
  }
  return {sx * x, sy * y};
}

}  // namespace

Point ConvexDomain::project(Point z) const {
  if (const auto* poly = as_polygon()) {
    if (polygon_inside(*poly, z)) return z;
    const auto& v = poly->vertices;
    Point best = v[0];
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Point c = project_to_segment(z, v[k], v[(k + 1) % v.size()]);
      const double d = std::abs(z - c);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    return best;
  }
  if (const auto* disk = as_disk()) {
    const Point r = z - disk->center;
    const double m = std::abs(r);
    return m <= disk->radius ? z : disk->center + r * (disk->radius / m);
  }
  const auto& e = *as_ellipse();
  const Point w = ellipse_local(e, z);
  const double level = std::norm(Point(w.real() / e.a, w.imag() / e.b));
  if (level <= 1.0) return z;
  return ellipse_global(e, ellipse_curve_nearest(e.a, e.b, w));
}

double ConvexDomain::distance(Point z) const { return std::abs(z - project(z)); }

Point ConvexDomain::interior_point() const {
  if (const auto* poly = as_polygon()) {
    Point s{};
    for (const Point& p : poly->vertices) s += p;
    return s / static_cast<double>(poly->vertices.size());
  }
  if (const auto* disk = as_disk()) return disk->center;
  return as_ellipse()->center;
}

ConvexDomain ConvexDomain::mapped(Point factor, Point shift) const {
  if (factor == Point{}) throw InvalidInput("mapping factor must be nonzero");
  const double scale = std::abs(factor);
  if (const auto* poly = as_polygon()) {
    std::vector<Point> v;
    v.reserve(poly->vertices.size());
    for (const Point& p : poly->vertices) v.push_back(factor * p + shift);
    return polygon(std::move(v));
  }
  if (const auto* disk = as_disk()) return ConvexDomain::disk(factor * disk->center + shift, disk->radius * scale);
  const auto& e = *as_ellipse();
  return ellipse(factor * e.center + shift, e.a * scale, e.b * scale, e.rotation + std::arg(factor));
}

}  // namespace turan
