#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"

namespace turan {

using namespace detail;

std::pair<Point, Point> diameter_endpoints(const ConvexDomain& domain) {
  if (const auto* poly = domain.as_polygon()) {
    const auto& v = poly->vertices;
    std::pair<Point, Point> best{v[0], v[1]};
    double best_d = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        const double d = std::abs(v[i] - v[j]);
        if (d > best_d) {
          best_d = d;
          best = {v[i], v[j]};
        }
      }
    }
    return best;
  }
  if (const auto* disk = domain.as_disk()) return {disk->center + disk->radius, disk->center - disk->radius};
  const auto& e = *domain.as_ellipse();
  const Point axis = std::polar(e.a, e.rotation);
  return {e.center + axis, e.center - axis};
}

double diameter(const ConvexDomain& domain) {
  if (const auto* disk = domain.as_disk()) return 2.0 * disk->radius;
  if (const auto* e = domain.as_ellipse()) return 2.0 * e->a;
  const auto [p, q] = diameter_endpoints(domain);
  return std::abs(p - q);
}

double width(const ConvexDomain& domain) {
  if (const auto* disk = domain.as_disk()) return 2.0 * disk->radius;
  if (const auto* e = domain.as_ellipse()) return 2.0 * e->b;
  // The minimal strip of a convex polygon has one side flush with an edge.
  const auto& v = domain.as_polygon()->vertices;
  const std::size_t n = v.size();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const Point e = v[(k + 1) % n] - v[k];
    const double len = std::abs(e);
    double far = 0.0;
    for (const Point& p : v) far = std::max(far, cross(e, p - v[k]) / len);
    best = std::min(best, far);
  }
  return best;
}

double perimeter(const ConvexDomain& domain) { return domain.boundary().length(); }

double supplementary_angle(const ConvexDomain& domain, double t) {
  const auto& bd = domain.boundary();
  return bd.angle_right(t) - bd.angle_left(t);
}

double largest_supplementary_angle(const ConvexDomain& domain) {
  const auto& bd = domain.boundary();
  double best = 0.0;
  for (double c : bd.corners()) best = std::max(best, bd.angle_right(c) - bd.angle_left(c));
  return best;
}

std::string_view to_string(DepthCase c) noexcept {
  switch (c) {
    case DepthCase::I: return "I";
    case DepthCase::II: return "II";
    case DepthCase::III: return "III";
    default: return "IV";
  }
}

DepthCase depth_classification(const ConvexDomain& domain) {
  constexpr double kTol = 1e-9;
  const double omega = largest_supplementary_angle(domain);
  if (omega < kPi / 2 - kTol) return DepthCase::I;
  if (omega > kPi / 2 + kTol) return DepthCase::II;
  // A right-angle corner keeps positive depth only when both sides of it are
  // straight near the corner, which always holds for polygon edges.
  return domain.as_polygon() ? DepthCase::III : DepthCase::IV;
}

std::optional<double> circularity_radius(const ConvexDomain& domain) {
  if (const auto* disk = domain.as_disk()) return disk->radius;
  if (const auto* e = domain.as_ellipse()) return e->a * e->a / e->b;  // 1 / min curvature
  return std::nullopt;
}

GeometrySummary summarize(const ConvexDomain& domain, const SmoothGridConfig& cfg) {
  GeometrySummary s;
  s.diameter = diameter(domain);
  s.width = width(domain);
  s.perimeter = perimeter(domain);
  s.depth = global_depth(domain, cfg);
  s.largest_supplementary = largest_supplementary_angle(domain);
  s.mu = mu_K(domain, cfg);
  s.classification = depth_classification(domain);
  s.circularity_radius = circularity_radius(domain);
  return s;
}

}  // namespace turan
