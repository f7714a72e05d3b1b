#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"

namespace turan {

using namespace detail;

namespace {

Point outward_normal(Point edge) { return Point(edge.imag(), -edge.real()) / std::abs(edge); }

/// Local depth at polygon vertex k: the longest chord over the normal cone.
/// Exact candidates are the two edge normals and the directions toward every
/// other vertex; a 1e-4 rad sweep with golden refinement backs them up.
double vertex_depth(const Polygon& poly, std::size_t k) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  const Point zeta = v[k];
  const double beta_lo = std::arg(outward_normal(v[k] - v[(k + n - 1) % n]));
  double beta_hi = std::arg(outward_normal(v[(k + 1) % n] - v[k]));
  while (beta_hi < beta_lo) beta_hi += kTwoPi;

  auto chord = [&](double beta) { return polygon_ray_exit(poly, zeta, -std::polar(1.0, beta)); };

  double best = std::max(chord(beta_lo), chord(beta_hi));
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    double beta = std::arg(zeta - v[j]);
    while (beta < beta_lo) beta += kTwoPi;
    if (beta <= beta_hi) best = std::max(best, chord(beta));
  }

  constexpr double kStep = 1e-4;
  const int steps = static_cast<int>(std::ceil((beta_hi - beta_lo) / kStep));
  double grid_best = -1.0;
  int grid_arg = 0;
  for (int i = 0; i <= steps; ++i) {
    const double beta = std::min(beta_hi, beta_lo + i * kStep);
    const double c = chord(beta);
    if (c > grid_best) {
      grid_best = c;
      grid_arg = i;
    }
  }
  const double lo = std::max(beta_lo, beta_lo + (grid_arg - 1) * kStep);
  const double hi = std::min(beta_hi, beta_lo + (grid_arg + 1) * kStep);
  best = std::max(best, grid_best);
  if (hi > lo) best = std::max(best, golden_max(chord, lo, hi, 1e-13).second);
  return best;
}

double polygon_edge_depth(const Polygon& poly, std::size_t k, Point zeta) {
  const auto& v = poly.vertices;
  const Point normal = outward_normal(v[(k + 1) % v.size()] - v[k]);
  return polygon_ray_exit(poly, zeta, -normal);
}

double ellipse_normal_chord(const ConvexDomain& domain, double theta) {
  const auto& e = *domain.as_ellipse();
  const auto s = domain.boundary().native(theta);
  const Point normal = Point(0.0, -1.0) * s.dz / std::abs(s.dz);
  return ellipse_ray_exit(e, s.z, -normal);
}

}  // namespace

double local_depth(const ConvexDomain& domain, double t, const SmoothGridConfig&) {
  const auto& bd = domain.boundary();
  if (const auto* disk = domain.as_disk()) return 2.0 * disk->radius;
  if (domain.as_ellipse()) return ellipse_normal_chord(domain, bd.arclength_to_native(t));

  const auto& poly = *domain.as_polygon();
  const double L = bd.length();
  const double r = wrap_period(t, L);
  const auto corners = bd.corners();
  const double tol = 1e-12 * L;
  for (std::size_t k = 0; k < corners.size(); ++k) {
    if (std::abs(r - corners[k]) <= tol) return vertex_depth(poly, k);
  }
  if (L - r <= tol) return vertex_depth(poly, 0);
  const auto it = std::upper_bound(corners.begin(), corners.end(), r);
  const std::size_t k = static_cast<std::size_t>(it - corners.begin()) - 1;
  return polygon_edge_depth(poly, k, bd.point(r));
}

double global_depth(const ConvexDomain& domain, const SmoothGridConfig& cfg) {
  if (const auto* disk = domain.as_disk()) return 2.0 * disk->radius;
  if (const auto* poly = domain.as_polygon()) {
    // Chord length along a fixed normal is concave along an edge, so the
    // infimum over each edge sits at one of its endpoints.
    const auto& v = poly->vertices;
    const std::size_t n = v.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      best = std::min(best, polygon_edge_depth(*poly, k, v[k]));
      best = std::min(best, polygon_edge_depth(*poly, k, v[(k + 1) % n]));
    }
    return best;
  }

  const int grid = std::max(16, cfg.grid);
  const double h = kTwoPi / grid;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double c = ellipse_normal_chord(domain, i * h);
    if (c < best) {
      best = c;
      best_theta = i * h;
    }
  }
  auto neg = [&](double theta) { return -ellipse_normal_chord(domain, theta); };
  double lo = best_theta - h, hi = best_theta + h;
  for (int round = 0; round < cfg.refinement_rounds; ++round) {
    const auto [x, fx] = golden_max(neg, lo, hi, 1e-14);
    best = std::min(best, -fx);
    const double half = (hi - lo) / 8.0;
    lo = x - half;
    hi = x + half;
  }
  return best;
}

}  // namespace turan
