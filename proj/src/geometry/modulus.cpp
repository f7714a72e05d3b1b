#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"
#include "turan/error.hpp"

namespace turan {

using namespace detail;

namespace {

/// Largest circular distance between a normal in [a_lo, a_hi] and one in [b_lo, b_hi].
double max_circular_distance(double a_lo, double a_hi, double b_lo, double b_hi) {
  const double d_lo = a_lo - b_hi, d_hi = a_hi - b_lo;
  if (std::ceil((d_lo - kPi) / kTwoPi) <= std::floor((d_hi - kPi) / kTwoPi)) return kPi;
  return std::max(std::abs(wrap_pi(d_lo)), std::abs(wrap_pi(d_hi)));
}

struct Step {
  double distance;
  double angle;
};

/// Every (feature, feature) pair of a polygon: vertices carry their normal
/// cone, edges a single normal. omega is a step function of these distances.
std::vector<Step> polygon_steps(const Polygon& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  std::vector<double> edge_normal(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Point e = v[(k + 1) % n] - v[k];
    edge_normal[k] = std::arg(Point(e.imag(), -e.real()));
  }
  std::vector<double> cone_lo(n), cone_hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    cone_lo[k] = edge_normal[(k + n - 1) % n];
    cone_hi[k] = edge_normal[k];
    while (cone_hi[k] < cone_lo[k]) cone_hi[k] += kTwoPi;
  }

  std::vector<Step> steps;
  steps.reserve(2 * n * n + n);
  auto add = [&](double d, double a) { steps.push_back({d, a}); };
  for (std::size_t i = 0; i < n; ++i) {
    const Point a0 = v[i], a1 = v[(i + 1) % n];
    for (std::size_t j = i; j < n; ++j) {
      add(std::abs(v[i] - v[j]), max_circular_distance(cone_lo[i], cone_hi[i], cone_lo[j], cone_hi[j]));
      const Point b0 = v[j], b1 = v[(j + 1) % n];
      const double ee = std::min({point_segment_distance(a0, b0, b1), point_segment_distance(a1, b0, b1),
                                  point_segment_distance(b0, a0, a1), point_segment_distance(b1, a0, a1)});
      add(ee, max_circular_distance(edge_normal[i], edge_normal[i], edge_normal[j], edge_normal[j]));
    }
    for (std::size_t j = 0; j < n; ++j) {
      add(point_segment_distance(v[i], v[j], v[(j + 1) % n]),
          max_circular_distance(cone_lo[i], cone_hi[i], edge_normal[j], edge_normal[j]));
    }
  }
  return steps;
}

ModulusValue polygon_modulus(const Polygon& poly, double t) {
  const auto steps = polygon_steps(poly);
  double scale = 0.0;
  for (const auto& s : steps) scale = std::max(scale, s.distance);
  const double tol = 1e-12 * scale;
  ModulusValue out;
  for (const auto& s : steps) {
    if (s.distance <= t + tol) out.upper = std::max(out.upper, s.angle);
    if (s.distance < t - tol) out.lower = std::max(out.lower, s.angle);
  }
  if (t <= tol) out.lower = out.upper;
  return out;
}

/// Boundary of a smooth domain sampled uniformly in the native parameter,
/// with the tangent angle lifted along the samples.
struct SmoothSamples {
  std::vector<Point> z;
  std::vector<double> alpha;
  double step;
};

SmoothSamples sample_smooth(const BoundaryParametrization& bd, int grid) {
  SmoothSamples s;
  s.step = bd.native_period() / grid;
  s.z.resize(grid);
  s.alpha.resize(grid);
  for (int i = 0; i < grid; ++i) {
    const auto p = bd.native(i * s.step);
    s.z[i] = p.z;
    const double a = std::arg(p.dz);
    s.alpha[i] = i == 0 ? a : s.alpha[i - 1] + wrap_pi(a - s.alpha[i - 1]);
  }
  return s;
}

/// Continuous tangent angle of a smooth boundary at native parameter u,
/// lifted near `reference`.
double native_angle_near(const BoundaryParametrization& bd, double u, double reference) {
  const double a = std::arg(bd.native(u).dz);
  return reference + wrap_pi(a - reference);
}

/// Largest normal-angle gap (capped at pi) from base u to a forward partner
/// within chord t. Partners are scanned up to the antipodal tangent.
double best_forward_gap(const BoundaryParametrization& bd, double u, double t, int scan) {
  const double period = bd.native_period();
  const Point z0 = bd.native(u).z;
  const double a0 = std::arg(bd.native(u).dz);
  const double reach = period / 2.0;  // antipodal tangent for ellipses
  double last_ok = 0.0;
  int last_index = 0;
  for (int k = 1; k <= scan; ++k) {
    const double w = reach * k / scan;
    if (std::abs(bd.native(u + w).z - z0) <= t) {
      last_ok = w;
      last_index = k;
    }
  }
  if (last_index == scan) return kPi;
  double lo = last_ok, hi = reach * (last_index + 1) / scan;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (std::abs(bd.native(u + mid).z - z0) <= t ? lo : hi) = mid;
  }
  if (lo == 0.0) return 0.0;
  double gap = 0.0, ref = a0;
  // Unwrap the angle along the partner path to keep the gap in [0, pi].
  const int pieces = 16;
  for (int k = 1; k <= pieces; ++k) ref = native_angle_near(bd, u + lo * k / pieces, ref);
  gap = ref - a0;
  return std::clamp(gap, 0.0, kPi);
}

double smooth_modulus(const ConvexDomain& domain, double t, const SmoothGridConfig& cfg) {
  const auto& bd = domain.boundary();
  const int grid = std::max(16, cfg.grid - cfg.grid % 2);
  const auto s = sample_smooth(bd, grid);
  const int half = grid / 2;
  double best = 0.0;
  int best_i = 0;
  for (int i = 0; i < grid; ++i) {
    for (int k = half; k >= 1; --k) {
      const int j = (i + k) % grid;
      if (std::abs(s.z[j] - s.z[i]) <= t) {
        double gap = s.alpha[j] - s.alpha[i];
        if (j < i) gap += kTwoPi;
        gap = std::min(gap, kPi);
        if (gap > best) {
          best = gap;
          best_i = i;
        }
        break;
      }
    }
  }
  if (best >= kPi) return kPi;
  auto g = [&](double u) { return best_forward_gap(bd, u, t, 512); };
  double lo = (best_i - 1) * s.step, hi = (best_i + 1) * s.step;
  for (int round = 0; round < cfg.refinement_rounds; ++round) {
    const auto [x, fx] = golden_max(g, lo, hi, 1e-12);
    best = std::max(best, fx);
    const double w = (hi - lo) / 8.0;
    lo = x - w;
    hi = x + w;
  }
  return best;
}

/// inf of the chord over boundary pairs whose normals differ by at least pi/2.
double smooth_mu(const ConvexDomain& domain, const SmoothGridConfig& cfg) {
  const auto& bd = domain.boundary();
  const int grid = std::max(16, cfg.grid - cfg.grid % 2);
  const auto s = sample_smooth(bd, grid);
  const int half = grid / 2;
  double best = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < grid; ++i) {
    for (int k = 1; k <= half; ++k) {
      const int j = (i + k) % grid;
      double gap = s.alpha[j] - s.alpha[i];
      if (j < i) gap += kTwoPi;
      if (gap < kPi / 2) continue;
      const double c = std::abs(s.z[j] - s.z[i]);
      if (c < best) {
        best = c;
        best_i = i;
      }
    }
  }

  // Refine: for a base u, the partner where the gap first reaches pi/2,
  // then the closest partner beyond it.
  auto chord_from = [&](double u) {
    const double a0 = std::arg(bd.native(u).dz);
    const Point z0 = bd.native(u).z;
    const double reach = bd.native_period() / 2.0;
    auto gap_at = [&](double w) {
      double ref = a0;
      const int pieces = 16;
      for (int k = 1; k <= pieces; ++k) ref = native_angle_near(bd, u + w * k / pieces, ref);
      return ref - a0;
    };
    double lo = 0.0, hi = reach;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (gap_at(mid) < kPi / 2 ? lo : hi) = mid;
    }
    auto neg_chord = [&](double w) { return -std::abs(bd.native(u + w).z - z0); };
    double best_c = -neg_chord(hi);
    const int scan = 64;
    double arg_w = hi;
    for (int k = 1; k <= scan; ++k) {
      const double w = hi + (reach - hi) * k / scan;
      const double c = -neg_chord(w);
      if (c < best_c) {
        best_c = c;
        arg_w = w;
      }
    }
    if (arg_w > hi) {
      const double dw = (reach - hi) / scan;
      best_c = std::min(best_c, -golden_max(neg_chord, std::max(hi, arg_w - dw), std::min(reach, arg_w + dw), 1e-13).second);
    }
    return best_c;
  };
  auto neg = [&](double u) { return -chord_from(u); };
  double lo = (best_i - 1) * s.step, hi = (best_i + 1) * s.step;
  for (int round = 0; round < cfg.refinement_rounds; ++round) {
    const auto [x, fx] = golden_max(neg, lo, hi, 1e-12);
    best = std::min(best, -fx);
    const double w = (hi - lo) / 8.0;
    lo = x - w;
    hi = x + w;
  }
  return best;
}

}  // namespace

ModulusValue modulus_of_continuity(const ConvexDomain& domain, double t, const SmoothGridConfig& cfg) {
  if (!(t >= 0.0)) throw PreconditionError("modulus of continuity needs t >= 0");
  if (const auto* poly = domain.as_polygon()) return polygon_modulus(*poly, t);
  if (const auto* disk = domain.as_disk()) {
    const double w = t >= 2.0 * disk->radius ? kPi : 2.0 * std::asin(t / (2.0 * disk->radius));
    return {w, w};
  }
  const double w = smooth_modulus(domain, t, cfg);
  return {w, w};
}

double mu_K(const ConvexDomain& domain, const SmoothGridConfig& cfg) {
  if (const auto* poly = domain.as_polygon()) {
    // mu = inf { distance : angle > pi/2 } over the feature pairs.
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : polygon_steps(*poly)) {
      if (s.angle > kPi / 2 + 1e-12) best = std::min(best, s.distance);
    }
    return best;
  }
  if (const auto* disk = domain.as_disk()) return std::sqrt(2.0) * disk->radius;
  return smooth_mu(domain, cfg);
}

double modulus_of_continuity_arclength(const ConvexDomain& domain, double s, const SmoothGridConfig& cfg) {
  if (!(s >= 0.0)) throw PreconditionError("arc-length modulus needs s >= 0");
  const auto& bd = domain.boundary();
  const double L = bd.length();
  const double laps = std::floor(s / L);
  const double r = s - laps * L;
  const double lift = laps * kTwoPi;
  if (r <= 0.0) return lift;

  if (const auto* disk = domain.as_disk()) return r / disk->radius + lift;

  if (domain.as_polygon()) {
    // Sum of the corner jumps strictly inside a window of length r.
    const auto corners = bd.corners();
    const std::size_t n = corners.size();
    std::vector<double> jump(n);
    for (std::size_t k = 0; k < n; ++k) jump[k] = bd.angle_right(corners[k]) - bd.angle_left(corners[k]);
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t m = 0; m < n; ++m) {
        const std::size_t j = (i + m) % n;
        double span = corners[j] - corners[i];
        if (span < 0) span += L;
        if (m > 0 && span >= r) break;
        sum += jump[j];
        best = std::max(best, sum);
      }
    }
    return best + lift;
  }

  const int grid = std::max(16, cfg.grid);
  auto gain = [&](double tau) { return bd.angle_left(tau + r) - bd.angle_left(tau); };
  const double h = L / grid;
  double best = 0.0, best_tau = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double g = gain(i * h);
    if (g > best) {
      best = g;
      best_tau = i * h;
    }
  }
  double lo = best_tau - h, hi = best_tau + h;
  for (int round = 0; round < cfg.refinement_rounds; ++round) {
    const auto [x, fx] = golden_max(gain, lo, hi, 1e-12);
    best = std::max(best, fx);
    const double w = (hi - lo) / 8.0;
    lo = x - w;
    hi = x + w;
  }
  return best + lift;
}

}  // namespace turan
