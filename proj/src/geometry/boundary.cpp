#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "internal.hpp"

namespace turan::detail {

namespace {

class PolygonBoundary final : public BoundaryParametrization {
 public:
  explicit PolygonBoundary(const Polygon& poly) : vertices_(poly.vertices) {
    const std::size_t n = vertices_.size();
    start_.resize(n + 1, 0.0);
    angle_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Point e = vertices_[(k + 1) % n] - vertices_[k];
      start_[k + 1] = start_[k] + std::abs(e);
      if (k == 0) {
        angle_[0] = wrap_period(std::arg(e), kTwoPi);
      } else {
        const Point prev = vertices_[k] - vertices_[k - 1];
        angle_[k] = angle_[k - 1] + std::atan2(cross(prev, e), dot(prev, e));
      }
    }
  }

  double length() const override { return start_.back(); }

  Point point(double t) const override {
    const double r = wrap_period(t, length());
    const std::size_t k = edge_index(r);
    const std::size_t n = vertices_.size();
    const Point e = vertices_[(k + 1) % n] - vertices_[k];
    return vertices_[k] + (r - start_[k]) / std::abs(e) * e;
  }

  double angle_left(double t) const override { return angle(t, true); }
  double angle_right(double t) const override { return angle(t, false); }

  std::vector<double> corners() const override { return {start_.begin(), start_.end() - 1}; }

  double native_period() const override { return length(); }
  Sample native(double u) const override {
    const double r = wrap_period(u, length());
    const std::size_t k = edge_index(r);
    const std::size_t n = vertices_.size();
    const Point e = vertices_[(k + 1) % n] - vertices_[k];
    const Point unit = e / std::abs(e);
    return {vertices_[k] + (r - start_[k]) * unit, unit};
  }
  double native_to_arclength(double u) const override { return u; }
  double arclength_to_native(double t) const override { return t; }
  std::vector<std::pair<double, double>> native_pieces() const override {
    std::vector<std::pair<double, double>> out;
    for (std::size_t k = 0; k + 1 < start_.size(); ++k) out.emplace_back(start_[k], start_[k + 1]);
    return out;
  }

 private:
  std::size_t edge_index(double r) const {
    auto it = std::upper_bound(start_.begin(), start_.end() - 1, r);
    return static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - start_.begin() - 1));
  }

  double angle(double t, bool left) const {
    const double L = length();
    const std::size_t n = vertices_.size();
    double laps = std::floor(t / L);
    double r = t - laps * L;
    const double tol = 1e-12 * L;
    if (r >= L - tol) {
      r = 0.0;
      laps += 1.0;
    }
    const double lift = laps * kTwoPi;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::abs(r - start_[k]) <= tol) {
        if (!left) return angle_[k] + lift;
        return (k == 0 ? angle_[n - 1] - kTwoPi : angle_[k - 1]) + lift;
      }
    }
    return angle_[edge_index(r)] + lift;
  }

  std::vector<Point> vertices_;
  std::vector<double> start_;  // arc length at vertex k, start_[n] = L
  std::vector<double> angle_;  // lifted tangent angle of edge k
};

class CircleBoundary final : public BoundaryParametrization {
 public:
  explicit CircleBoundary(const Disk& d) : center_(d.center), radius_(d.radius) {}

  double length() const override { return kTwoPi * radius_; }
  Point point(double t) const override { return center_ + std::polar(radius_, t / radius_); }
  double angle_left(double t) const override { return t / radius_ + kPi / 2; }
  double angle_right(double t) const override { return t / radius_ + kPi / 2; }
  std::vector<double> corners() const override { return {}; }

  double native_period() const override { return length(); }
  Sample native(double u) const override {
    const Point w = std::polar(1.0, u / radius_);
    return {center_ + radius_ * w, Point(0.0, 1.0) * w};
  }
  double native_to_arclength(double u) const override { return u; }
  double arclength_to_native(double t) const override { return t; }
  std::vector<std::pair<double, double>> native_pieces() const override { return {{0.0, length()}}; }

 private:
  Point center_;
  double radius_;
};

class EllipseBoundary final : public BoundaryParametrization {
 public:
  static constexpr int kPanels = 1024;

  explicit EllipseBoundary(const Ellipse& e) : e_(e) {
    cumulative_.resize(kPanels + 1, 0.0);
    const double h = kTwoPi / kPanels;
    for (int k = 0; k < kPanels; ++k) cumulative_[k + 1] = cumulative_[k] + speed_integral(k * h, (k + 1) * h);
  }

  double length() const override { return cumulative_.back(); }
  Point point(double t) const override { return native(arclength_to_native(t)).z; }
  double angle_left(double t) const override { return lifted_angle(t); }
  double angle_right(double t) const override { return lifted_angle(t); }
  std::vector<double> corners() const override { return {}; }

  double native_period() const override { return kTwoPi; }
  Sample native(double theta) const override {
    const Point rot = std::polar(1.0, e_.rotation);
    const double c = std::cos(theta), s = std::sin(theta);
    return {e_.center + rot * Point(e_.a * c, e_.b * s), rot * Point(-e_.a * s, e_.b * c)};
  }

  double native_to_arclength(double theta) const override {
    const double laps = std::floor(theta / kTwoPi);
    const double r = theta - laps * kTwoPi;
    const double h = kTwoPi / kPanels;
    const int k = std::clamp(static_cast<int>(r / h), 0, kPanels - 1);
    return laps * length() + cumulative_[k] + speed_integral(k * h, r);
  }

  double arclength_to_native(double t) const override {
    const double L = length();
    const double laps = std::floor(t / L);
    const double r = t - laps * L;
    const double h = kTwoPi / kPanels;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    const int k = std::clamp(static_cast<int>(it - cumulative_.begin()) - 1, 0, kPanels - 1);
    const double lo = k * h, hi = (k + 1) * h;
    double theta = lo + h * (r - cumulative_[k]) / (cumulative_[k + 1] - cumulative_[k]);
    for (int iter = 0; iter < 8; ++iter) {
      const double f = cumulative_[k] + speed_integral(lo, theta) - r;
      const double step = f / speed(theta);
      theta = std::clamp(theta - step, lo, hi);
      if (std::abs(step) < 1e-15) break;
    }
    return laps * kTwoPi + theta;
  }

  std::vector<std::pair<double, double>> native_pieces() const override { return {{0.0, kTwoPi}}; }

 private:
  double speed(double theta) const { return std::hypot(e_.a * std::sin(theta), e_.b * std::cos(theta)); }

  double speed_integral(double lo, double hi) const {
    if (hi <= lo) return 0.0;
    return boost::math::quadrature::gauss<double, 10>::integrate([this](double x) { return speed(x); }, lo, hi);
  }

  /// Tangent angle in the native parameter, continuous and increasing.
  double native_angle(double theta) const {
    const double base = e_.rotation + theta + kPi / 2;
    const Point d(-e_.a * std::sin(theta), e_.b * std::cos(theta));
    return base + wrap_pi(std::arg(d) - theta - kPi / 2);
  }

  double lifted_angle(double t) const { return native_angle(arclength_to_native(t)); }

  Ellipse e_;
  std::vector<double> cumulative_;
};

}  // namespace

std::shared_ptr<const BoundaryParametrization> make_boundary(const ConvexDomain::Shape& shape) {
  return std::visit(
      [](const auto& s) -> std::shared_ptr<const BoundaryParametrization> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          return std::make_shared<PolygonBoundary>(s);
        } else if constexpr (std::is_same_v<T, Disk>) {
          return std::make_shared<CircleBoundary>(s);
        } else {
          return std::make_shared<EllipseBoundary>(s);
        }
      },
      shape);
}

}  // namespace turan::detail
