#include <doctest.h>

#include "support.hpp"
#include "turan/geometry.hpp"

using namespace turan;
using namespace turan::test;

namespace {

/// Largest s with z + s u inside the polygon, by clipping against each edge's half-plane.
double clip_chord(const std::vector<Point>& v, Point z, Point u) {
  double smax = 1e300;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i], b = v[(i + 1) % n];
    const Point inward = (b - a) * Point{0, 1};
    const double rate = inward.real() * u.real() + inward.imag() * u.imag();
    const double slack = inward.real() * (z - a).real() + inward.imag() * (z - a).imag();
    if (rate < -1e-15) smax = std::min(smax, slack / -rate);
  }
  return std::max(0.0, smax);
}

struct NormalSample {
  Point z;
  double angle;  // outer normal direction
};

/// Boundary points of a polygon with their outer normals; vertices carry a fan over the normal cone.
std::vector<NormalSample> polygon_normals(const std::vector<Point>& v, int per_edge, int per_cone) {
  std::vector<NormalSample> out;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = v[i], b = v[(i + 1) % n];
    const double nrm = std::arg((b - a) * Point{0, -1});
    for (int k = 1; k < per_edge; ++k) out.push_back({a + (b - a) * (double(k) / per_edge), nrm});
    const Point c = v[(i + 2) % n];
    const double next = std::arg((c - b) * Point{0, -1});
    double turn = std::remainder(next - nrm, 2 * kPi);
    for (int k = 0; k <= per_cone; ++k) out.push_back({b, nrm + turn * k / per_cone});
  }
  return out;
}

double angle_between(double a, double b) { return std::abs(std::remainder(a - b, 2 * kPi)); }

double brute_mu(const std::vector<NormalSample>& s) {
  double best = 1e300;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (angle_between(s[i].angle, s[j].angle) > kPi / 2 + 1e-9) best = std::min(best, std::abs(s[i].z - s[j].z));
    }
  }
  return best;
}

double brute_diameter(const std::vector<Point>& pts) {
  double d = 0;
  for (const Point& a : pts)
    for (const Point& b : pts) d = std::max(d, std::abs(a - b));
  return d;
}

double brute_width(const std::vector<Point>& pts, int directions) {
  double w = 1e300;
  for (int k = 0; k < directions; ++k) {
    const Point u = std::polar(1.0, kPi * k / directions);
    double lo = 1e300, hi = -1e300;
    for (const Point& p : pts) {
      const double s = p.real() * u.real() + p.imag() * u.imag();
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    w = std::min(w, hi - lo);
  }
  return w;
}

/// Ellipse perimeter by the trapezoid rule, spectrally accurate for periodic integrands.
double ellipse_perimeter(double a, double b) {
  const int n = 20000;
  double s = 0;
  for (int i = 0; i < n; ++i) {
    const double t = 2 * kPi * i / n;
    s += std::hypot(a * std::sin(t), b * std::cos(t));
  }
  return s * 2 * kPi / n;
}

}  // namespace

TEST_CASE("polygon validation names the violated invariant") {
  auto msg = [](std::vector<Point> v) {
    try {
      ConvexDomain::polygon(std::move(v));
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg({{0, 0}, {0, 1}, {1, 1}, {1, 0}}) == "vertices not counterclockwise");
  CHECK(msg({{0, 0}, {1, 0}}) == "polygon needs at least 3 vertices");
  CHECK(msg({{0, 0}, {1, 0}, {2, 0}, {1, 1}}) == "polygon has three collinear vertices");
  CHECK(msg({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}) == "vertices not strictly convex");
  CHECK_THROWS_AS(ConvexDomain::disk({0, 0}, 0.0), InvalidInput);
  CHECK_THROWS_AS(ConvexDomain::ellipse({0, 0}, 0.5, 1.0), InvalidInput);
}

TEST_CASE("diameter, width and perimeter against brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = random_polygon(rng);
    const auto& v = k.as_polygon()->vertices;
    CHECK(diameter(k) == doctest::Approx(brute_diameter(v)).epsilon(1e-12));
    // Sampled directions overestimate the width, to first order in the step.
    const double w = brute_width(v, 20000);
    CHECK(width(k) <= w + 1e-12);
    CHECK(width(k) >= w - 1e-3 * diameter(k));
    double L = 0;
    for (std::size_t i = 0; i < v.size(); ++i) L += std::abs(v[(i + 1) % v.size()] - v[i]);
    CHECK(perimeter(k) == doctest::Approx(L).epsilon(1e-12));
  }
  const auto e = ellipse_1_half();
  CHECK(perimeter(e) == doctest::Approx(ellipse_perimeter(1.0, 0.5)).epsilon(1e-10));
  CHECK(diameter(e) == doctest::Approx(2.0));
  CHECK(width(e) == doctest::Approx(1.0));
  const auto h = hexagon();
  CHECK(diameter(h) == doctest::Approx(2.0));
  CHECK(width(h) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("boundary parametrization is arc length with lifted tangent angles") {
  for (const auto& [name, k] : catalogue()) {
    CAPTURE(name);
    const auto& bd = k.boundary();
    const double L = bd.length();
    const int n = 4000;
    double acc = 0;
    for (int i = 0; i < n; ++i) acc += std::abs(bd.point(L * (i + 1) / n) - bd.point(L * i / n));
    CHECK(acc == doctest::Approx(L).epsilon(1e-3));  // chords cut corners
    CHECK(std::abs(bd.point(L) - bd.point(0)) < 1e-9);
    CHECK(bd.angle_left(0.3 * L + L) == doctest::Approx(bd.angle_left(0.3 * L) + 2 * kPi));
    double prev = bd.angle_right(0.0);
    for (int i = 1; i < n; ++i) {
      const double a = bd.angle_right(L * i / n);
      CHECK(a >= prev - 1e-12);
      prev = a;
    }
    for (int i = 0; i < 50; ++i) {
      const double t = L * (i + 0.37) / 50;
      CHECK(bd.native_to_arclength(bd.arclength_to_native(t)) == doctest::Approx(t).epsilon(1e-10));
      CHECK(k.contains(bd.point(t), 1e-12));
    }
  }
}

TEST_CASE("projection and containment") {
  const auto sq = unit_square();
  CHECK(std::abs(sq.project({2, 0.5}) - Point{1, 0.5}) < 1e-15);
  CHECK(std::abs(sq.project({-1, -1}) - Point{0, 0}) < 1e-15);
  CHECK(sq.distance({0.5, 0.5}) == 0.0);
  CHECK(sq.distance({2, 2}) == doctest::Approx(std::sqrt(2.0)));
  const auto d = unit_disk();
  CHECK(std::abs(d.project({3, 4}) - Point{0.6, 0.8}) < 1e-15);
  const auto e = ellipse_1_half();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const Point z{u(rng), u(rng)};
    const Point p = e.project(z);
    CHECK(e.contains(p, 1e-12));
    // No sampled boundary point is closer.
    if (!e.contains(z)) {
      for (int k = 0; k < 256; ++k) {
        const Point b = e.boundary().native(2 * kPi * k / 256).z;
        CHECK(std::abs(z - p) <= std::abs(z - b) + 1e-12);
      }
    }
  }
}

TEST_CASE("local depth against half-plane clipping") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto k = random_polygon(rng);
    const auto& v = k.as_polygon()->vertices;
    const auto& bd = k.boundary();
    for (int i = 0; i < 40; ++i) {
      const double t = bd.length() * (i + 0.5) / 40;
      const Point z = bd.point(t);
      const double inner = bd.angle_right(t) + kPi / 2;
      const bool corner = std::abs(bd.angle_right(t) - bd.angle_left(t)) > 1e-12;
      if (corner) continue;
      CHECK(local_depth(k, t) == doctest::Approx(clip_chord(v, z, std::polar(1.0, inner))).epsilon(1e-10));
    }
    const auto corners = bd.corners();
    for (std::size_t c = 0; c < corners.size(); ++c) {
      const double t = corners[c];
      const Point z = bd.point(t);
      const double a0 = bd.angle_left(t) + kPi / 2, a1 = bd.angle_right(t) + kPi / 2;
      double best = 0;
      // Along each direction the chord ends on one edge line, where its length
      // 1/cos is convex in the angle: the maximum sits at a cone side or at a
      // direction towards another vertex.
      std::vector<double> dirs{a0, a1};
      for (const Point& w : v) {
        if (std::abs(w - z) < 1e-12) continue;
        double a = std::arg(w - z);
        a = a0 + std::remainder(a - a0, 2 * kPi);
        if (a >= a0 - 1e-15 && a <= a1 + 1e-15) dirs.push_back(a);
      }
      for (double a : dirs) best = std::max(best, clip_chord(v, z, std::polar(1.0, a)));
      double fan_best = 0;
      for (int s = 0; s <= 2000; ++s) fan_best = std::max(fan_best, clip_chord(v, z, std::polar(1.0, a0 + (a1 - a0) * s / 2000)));
      CHECK(best >= fan_best - 1e-12);
      CHECK(local_depth(k, t) == doctest::Approx(best).epsilon(1e-10));
    }
  }
}

TEST_CASE("global depth is the infimum of local depth") {
  for (const auto& [name, k] : catalogue()) {
    CAPTURE(name);
    const double h = global_depth(k);
    const auto& bd = k.boundary();
    double sampled = 1e300;
    for (int i = 0; i < 3000; ++i) {
      const double loc = local_depth(k, bd.length() * i / 3000);
      CHECK(loc >= h - 1e-9);
      sampled = std::min(sampled, loc);
    }
    CHECK(sampled <= h + 5e-3 * diameter(k));
  }
}

TEST_CASE("depth of the catalogue shapes") {
  CHECK(global_depth(unit_square()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(global_depth(equilateral_triangle()) == doctest::Approx(0.0));
  CHECK(global_depth(unit_disk()) == doctest::Approx(2.0));
  // Perpendicular chord through an edge midpoint of the side-1 hexagon is the width sqrt(3).
  const auto h = hexagon();
  const auto& v = h.as_polygon()->vertices;
  const Point mid = 0.5 * (v[0] + v[1]);
  const double chord = clip_chord(v, mid, (v[1] - v[0]) * Point{0, 1} / std::abs(v[1] - v[0]));
  CHECK(chord == doctest::Approx(std::sqrt(3.0)));
  CHECK(global_depth(h) == doctest::Approx(chord).epsilon(1e-12));
  CHECK(global_depth(ellipse_1_half()) == doctest::Approx(0.9295160031070265).epsilon(1e-9));
}

TEST_CASE("supplementary angles and classification") {
  CHECK(largest_supplementary_angle(unit_square()) == doctest::Approx(kPi / 2));
  CHECK(largest_supplementary_angle(hexagon()) == doctest::Approx(kPi / 3));
  CHECK(largest_supplementary_angle(equilateral_triangle()) == doctest::Approx(2 * kPi / 3));
  CHECK(largest_supplementary_angle(ellipse_1_half()) == 0.0);
  CHECK(depth_classification(unit_square()) == DepthCase::III);
  CHECK(depth_classification(equilateral_triangle()) == DepthCase::II);
  CHECK(depth_classification(ellipse_1_half()) == DepthCase::I);
  CHECK(depth_classification(hexagon()) == DepthCase::I);
  CHECK(to_string(DepthCase::IV) == "IV");
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto k = random_polygon(rng);
    const auto c = depth_classification(k);
    const bool positive = global_depth(k) > 1e-12;
    CHECK(positive == (c == DepthCase::I || c == DepthCase::III));
  }
}

TEST_CASE("modulus of continuity") {
  const auto h = hexagon();
  const auto w1 = modulus_of_continuity(h, 1.0);
  CHECK(w1.lower == doctest::Approx(kPi / 3));
  CHECK(w1.upper == doctest::Approx(2 * kPi / 3));
  CHECK(w1.contains(kPi / 2));
  const auto disk = unit_disk();
  for (double t : {0.1, 0.7, 1.5, 2.0}) {
    const auto w = modulus_of_continuity(disk, t);
    CHECK(w.lower == doctest::Approx(2 * std::asin(t / 2)));
    CHECK(w.upper == doctest::Approx(2 * std::asin(t / 2)));
  }
  const auto e = ellipse_1_half();
  double prev = 0;
  for (int i = 1; i <= 20; ++i) {
    const auto w = modulus_of_continuity(e, 0.1 * i);
    CHECK(w.lower <= w.upper + 1e-12);
    CHECK(w.upper >= prev - 1e-9);
    prev = w.upper;
  }
  CHECK_THROWS_AS(modulus_of_continuity(h, -1.0), PreconditionError);
  // Arc-length modulus: full period gives 2 pi, disk is linear.
  CHECK(modulus_of_continuity_arclength(h, 6.0) == doctest::Approx(2 * kPi));
  CHECK(modulus_of_continuity_arclength(disk, 0.5) == doctest::Approx(0.5));
  CHECK(modulus_of_continuity_arclength(h, 0.5) == doctest::Approx(kPi / 3));
}

TEST_CASE("mu against a brute-force pair search") {
  CHECK(mu_K(hexagon()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mu_K(unit_square()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mu_K(unit_disk()) == doctest::Approx(std::sqrt(2.0)));
  CHECK(mu_K(equilateral_triangle()) == 0.0);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const auto k = random_polygon(rng);
    const double brute = brute_mu(polygon_normals(k.as_polygon()->vertices, 60, 30));
    const double mu = mu_K(k);
    CAPTURE(trial);
    if (mu == 0.0) continue;  // omega starts above pi/2
    CHECK(mu <= brute + 1e-9);
    CHECK(mu >= brute - 0.05 * diameter(k));
  }
}

TEST_CASE("depth dominates mu on random polygons") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto k = random_polygon(rng);
    CHECK(global_depth(k) >= mu_K(k) - 1e-9);
  }
}

TEST_CASE("circularity radius and summary") {
  CHECK(circularity_radius(unit_disk()).value() == 1.0);
  CHECK(circularity_radius(ellipse_1_half()).value() == doctest::Approx(2.0));
  CHECK(!circularity_radius(unit_square()).has_value());
  const auto s = summarize(unit_disk());
  CHECK(s.diameter == doctest::Approx(2.0));
  CHECK(s.perimeter == doctest::Approx(2 * kPi));
  CHECK(s.classification == DepthCase::I);
  const auto m = unit_square().mapped({0, 2}, {5, 5});
  CHECK(global_depth(m) == doctest::Approx(2.0));
  CHECK(diameter(m) == doctest::Approx(2 * std::sqrt(2.0)));
}
