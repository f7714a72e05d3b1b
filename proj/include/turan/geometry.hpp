#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace turan {

/// Planar points are complex numbers throughout.
using Point = std::complex<double>;

struct Polygon {
  std::vector<Point> vertices;  // counterclockwise, strictly convex
};

struct Disk {
  Point center;
  double radius = 1.0;
};

struct Ellipse {
  Point center;
  double a = 1.0;  // semi-major
  double b = 1.0;  // semi-minor, 0 < b <= a
  double rotation = 0.0;
};

/// Closed segment [a, b]; a degenerate compact set, not a domain.
struct Segment {
  Point a;
  Point b;
};

/// Arc-length parametrization of the boundary curve of a convex domain,
/// counterclockwise, starting at a fixed point (vertex 0 for polygons,
/// the rotated +x extreme point for disks and ellipses).
///
/// Besides arc length there is a "native" parameter u in [0, native_period())
/// in which each shape is cheap to evaluate. For polygons and disks it is arc
/// length itself, for ellipses it is the eccentric angle. Integrals over the
/// boundary are taken in the native parameter with weight |dz/du|.
class BoundaryParametrization {
 public:
  struct Sample {
    Point z;   // gamma(u)
    Point dz;  // d gamma / du
  };

  virtual ~BoundaryParametrization() = default;

  virtual double length() const = 0;
  /// gamma(t); t is taken modulo length().
  virtual Point point(double t) const = 0;
  /// Lifted left/right tangent angles. alpha(t + L) = alpha(t) + 2 pi.
  virtual double angle_left(double t) const = 0;
  virtual double angle_right(double t) const = 0;
  /// Arc-length positions of the corners in [0, L); empty for smooth curves.
  virtual std::vector<double> corners() const = 0;

  virtual double native_period() const = 0;
  virtual Sample native(double u) const = 0;
  virtual double native_to_arclength(double u) const = 0;
  virtual double arclength_to_native(double t) const = 0;
  /// Maximal smooth pieces [u0, u1] covering [0, native_period()].
  virtual std::vector<std::pair<double, double>> native_pieces() const = 0;
};

class ConvexDomain {
 public:
  using Shape = std::variant<Polygon, Disk, Ellipse>;

  /// Validating constructors; throw InvalidInput naming the violated invariant.
  static ConvexDomain polygon(std::vector<Point> vertices);
  static ConvexDomain disk(Point center, double radius);
  static ConvexDomain ellipse(Point center, double a, double b, double rotation = 0.0);
  /// Regular k-gon with the given side length; vertex 0 at angle `phase`
  /// as seen from `center`.
  static ConvexDomain regular_polygon(int k, double side, Point center = {}, double phase = 0.0);

  const Shape& shape() const noexcept { return shape_; }
  const Polygon* as_polygon() const noexcept { return std::get_if<Polygon>(&shape_); }
  const Disk* as_disk() const noexcept { return std::get_if<Disk>(&shape_); }
  const Ellipse* as_ellipse() const noexcept { return std::get_if<Ellipse>(&shape_); }
  std::string_view kind() const noexcept;

  const BoundaryParametrization& boundary() const noexcept { return *boundary_; }

  /// Euclidean distance from z to K (0 for points of K).
  double distance(Point z) const;
  /// Nearest point of K. Ties at polygon vertices go to the lower-index edge.
  Point project(Point z) const;
  bool contains(Point z, double tol = 0.0) const { return distance(z) <= tol; }
  /// A point in the interior (vertex average for polygons).
  Point interior_point() const;

  /// Image of K under z -> factor * z + shift (factor != 0).
  ConvexDomain mapped(Point factor, Point shift) const;

 private:
  explicit ConvexDomain(Shape shape);

  Shape shape_;
  std::shared_ptr<const BoundaryParametrization> boundary_;
};

/// Grid resolution for the smooth (ellipse) sweeps behind depth and modulus.
struct SmoothGridConfig {
  int grid = 4096;
  int refinement_rounds = 3;
};

double diameter(const ConvexDomain& domain);
/// The two endpoints of a diameter (first pair found for polygons).
std::pair<Point, Point> diameter_endpoints(const ConvexDomain& domain);
double width(const ConvexDomain& domain);
double perimeter(const ConvexDomain& domain);

/// Chord length of K along the inward normal line at boundary parameter t,
/// maximized over the normal cone at corners.
double local_depth(const ConvexDomain& domain, double t, const SmoothGridConfig& cfg = {});
/// Infimum of the local depth over the boundary.
double global_depth(const ConvexDomain& domain, const SmoothGridConfig& cfg = {});

/// Omega(t) = alpha_+(t) - alpha_-(t).
double supplementary_angle(const ConvexDomain& domain, double t);
double largest_supplementary_angle(const ConvexDomain& domain);

/// The two one-sided values of the (multivalued) modulus of continuity of
/// the outer normal direction at chord distance t.
struct ModulusValue {
  double lower = 0.0;  // omega_-(t)
  double upper = 0.0;  // omega_+(t)
  bool contains(double angle, double tol = 1e-12) const {
    return lower - tol <= angle && angle <= upper + tol;
  }
};

ModulusValue modulus_of_continuity(const ConvexDomain& domain, double t,
                                   const SmoothGridConfig& cfg = {});
/// Modulus of continuity of the tangent angle with respect to arc length.
double modulus_of_continuity_arclength(const ConvexDomain& domain, double s,
                                       const SmoothGridConfig& cfg = {});
/// Largest t with pi/2 in [omega_-(t), omega_+(t)]; 0 when omega starts above pi/2.
double mu_K(const ConvexDomain& domain, const SmoothGridConfig& cfg = {});

enum class DepthCase { I, II, III, IV };
std::string_view to_string(DepthCase c) noexcept;
DepthCase depth_classification(const ConvexDomain& domain);

/// Radius R for which K is R-circular, if any (absent for polygons).
std::optional<double> circularity_radius(const ConvexDomain& domain);

struct GeometrySummary {
  double diameter = 0.0;
  double width = 0.0;
  double perimeter = 0.0;
  double depth = 0.0;                  // h_K
  double largest_supplementary = 0.0;  // Omega_K
  double mu = 0.0;                     // mu_K
  DepthCase classification = DepthCase::I;
  std::optional<double> circularity_radius;
};

GeometrySummary summarize(const ConvexDomain& domain, const SmoothGridConfig& cfg = {});

}  // namespace turan
