#include <doctest.h>

#include <limits>

#include "support.hpp"
#include "turan/capacity.hpp"

using namespace turan;
using namespace turan::test;

namespace {

/// Regular k-gon capacity by Simpson integration of the Gamma integral, independent of std::tgamma.
double gamma_by_quadrature(double x) {
  // Gamma(x) = int_0^1 (-log u)^(x-1) du; substitute u = exp(-s^(1/x)) to remove the singularity:
  // Gamma(x) = (1/x) int_0^inf exp(-s^(1/x)) ds.
  const int n = 400000;
  const double upper = std::pow(60.0, x);
  double acc = 0;
  for (int i = 0; i <= n; ++i) {
    const double s = upper * i / n;
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    acc += w * std::exp(-std::pow(s, 1.0 / x));
  }
  return acc * upper / n / 3.0 / x;
}

double circumradius(int k, double side) { return side / (2 * std::sin(kPi / k)); }

}  // namespace

TEST_CASE("segment Chebyshev lower bound") {
  CHECK(segment_chebyshev_lower(2.0, 3) == doctest::Approx(0.25));
  CHECK(segment_chebyshev_lower(4.0, 1) == doctest::Approx(2.0));
  CHECK(segment_chebyshev_lower(2.0, 5) == doctest::Approx(0.0625));
}

TEST_CASE("regular polygon capacity") {
  CHECK(regular_polygon_capacity(4, 1.0) == doctest::Approx(0.59017).epsilon(1e-5));
  CHECK(regular_polygon_capacity(4, 2.5) == doctest::Approx(2.5 * regular_polygon_capacity(4, 1.0)));
  for (int k : {3, 4, 5, 6, 7, 9}) {
    CAPTURE(k);
    const double expected = gamma_by_quadrature(1.0 / k) /
                            (std::sqrt(kPi) * std::pow(2.0, 1.0 + 2.0 / k) * gamma_by_quadrature(0.5 + 1.0 / k));
    CHECK(regular_polygon_capacity(k, 1.0) == doctest::Approx(expected).epsilon(1e-6));
  }
  int first = 0;
  for (int k = 3; k <= 40 && first == 0; ++k)
    if (regular_polygon_capacity(k, 1.0) > 1.0) first = k;
  CHECK(first == 7);
  CHECK(regular_polygon_capacity(6, 1.0) < 1.0);
  CHECK(regular_polygon_capacity(96, 1.0) / circumradius(96, 1.0) == doctest::Approx(1.0).epsilon(0.01));
  for (int k = 3; k < 60; ++k) CHECK(regular_polygon_capacity(k, 1.0) <= circumradius(k, 1.0));
}

TEST_CASE("closed forms") {
  CHECK(*transfinite_diameter_exact(Segment{{-1, 0}, {1, 0}}) == doctest::Approx(0.5));
  CHECK(*transfinite_diameter_exact(RealIntervals{{{0, 4}}}) == doctest::Approx(1.0));
  CHECK(!transfinite_diameter_exact(RealIntervals{{{0, 1}, {3, 4}}}));
  CHECK(*transfinite_diameter_exact(ConvexDomain::disk({3, 1}, 2.5)) == doctest::Approx(2.5));
  CHECK(*transfinite_diameter_exact(ellipse_1_half()) == doctest::Approx(0.75));
  CHECK(*transfinite_diameter_exact(unit_square()) == doctest::Approx(0.5901702));
  CHECK(*transfinite_diameter_exact(ConvexDomain::regular_polygon(7, 1.0)) > 1.0);
  CHECK(!transfinite_diameter_exact(ConvexDomain::polygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}})));
  CHECK_THROWS_AS(validate(RealIntervals{{{0, 2}, {1, 3}}}), InvalidInput);
  CHECK_THROWS_AS(validate(RealIntervals{}), InvalidInput);
  CHECK_THROWS_AS(validate(Segment{{1, 1}, {1, 1}}), InvalidInput);
}

TEST_CASE("Fekete estimates") {
  const auto disk = transfinite_diameter_fekete(unit_disk(), 64, 3);
  CHECK(disk.chebyshev_estimate == doctest::Approx(1.0).epsilon(0.02));
  CHECK(disk.delta >= 1.0);
  const auto seg = transfinite_diameter_fekete(Segment{{-2, 0}, {2, 0}}, 64, 3);
  CHECK(seg.chebyshev_estimate == doctest::Approx(1.0).epsilon(0.02));
  for (const Point& z : seg.points) CHECK(std::abs(z.imag()) < 1e-12);
  // Pairwise geometric mean recomputed from the returned points.
  double log_sum = 0;
  for (std::size_t i = 0; i < seg.points.size(); ++i)
    for (std::size_t j = i + 1; j < seg.points.size(); ++j) log_sum += std::log(std::abs(seg.points[i] - seg.points[j]));
  CHECK(std::exp(log_sum / (64.0 * 63.0 / 2.0)) == doctest::Approx(seg.delta).epsilon(1e-12));
  CHECK_THROWS_AS(transfinite_diameter_fekete(unit_disk(), 1, 0), InvalidInput);
}

TEST_CASE("Fekete diameters decrease towards the capacity") {
  FeketeConfig cfg;
  cfg.restarts = 6;
  const auto sq = unit_square();
  const double exact = *transfinite_diameter_exact(sq);
  const double diam_half = diameter(sq) / 2;
  double previous = std::numeric_limits<double>::infinity();
  for (int m : {4, 8, 16, 32, 64}) {
    CAPTURE(m);
    const auto e = transfinite_diameter_fekete(sq, m, 11, cfg);
    CHECK(e.delta <= previous * (1 + 1e-9));
    CHECK(e.delta >= exact);
    CHECK(e.chebyshev_estimate >= exact * (1 - 1e-9));
    CHECK(exact <= diam_half);
    previous = e.delta;
  }
}

TEST_CASE("Fekete search is deterministic per seed") {
  FeketeConfig cfg;
  cfg.restarts = 3;
  const auto a = transfinite_diameter_fekete(ellipse_1_half(), 12, 5, cfg);
  const auto b = transfinite_diameter_fekete(ellipse_1_half(), 12, 5, cfg);
  CHECK(a.delta == b.delta);
  CHECK(a.points == b.points);
}

TEST_CASE("numerical minimax") {
  const Segment unit{{-1, 0}, {1, 0}};
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    const auto r = chebyshev_min_norm_numeric(unit, k);
    CHECK(r.value == doctest::Approx(std::pow(2.0, 1 - k)).epsilon(1e-4));
    CHECK(r.value >= std::pow(0.5, k) * (1 - 1e-9));
  }
  const auto disk = chebyshev_min_norm_numeric(unit_disk(), 2);
  CHECK(disk.value == doctest::Approx(1.0).epsilon(1e-4));
  const auto wide = chebyshev_min_norm_numeric(Segment{{0, 0}, {4, 0}}, 1);
  CHECK(wide.value == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(std::abs(wide.zeros.at(0) - Point{2, 0}) < 1e-3);
  const auto sq = chebyshev_min_norm_numeric(unit_square(), 2);
  CHECK(sq.value >= std::pow(*transfinite_diameter_exact(unit_square()), 2) * (1 - 1e-9));
  CHECK_THROWS_AS(chebyshev_min_norm_numeric(unit, 7), InvalidInput);
}

TEST_CASE("Polya inequality") {
  const auto one = polya_check(RealIntervals{{{0, 4}}}, 16, 1);
  CHECK(one.total_length == doctest::Approx(4.0));
  CHECK(one.holds);
  CHECK(one.margin >= 0.0);
  // Equality on one interval: the margin is the Fekete bias and shrinks with m.
  CHECK(polya_check(RealIntervals{{{0, 4}}}, 64, 1).margin < one.margin);
  const auto two = polya_check(RealIntervals{{{0, 1}, {3, 4}}}, 32, 1);
  CHECK(two.total_length == doctest::Approx(2.0));
  CHECK(two.holds);
  CHECK(!two.low_margin);
}
