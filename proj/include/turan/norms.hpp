#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "turan/geometry.hpp"
#include "turan/polynomial.hpp"

namespace turan {

/// Adaptive Gauss-Kronrod settings for boundary integrals. Corners are
/// always panel boundaries.
struct QuadratureConfig {
  int initial_panels = 2;  // per smooth arc
  double relative_tolerance = 1e-9;
  int max_depth = 12;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

/// Integral of g over the boundary with respect to arc length.
QuadratureResult boundary_integral(const ConvexDomain& domain, const std::function<double(Point)>& g,
                                   const QuadratureConfig& cfg = {});
/// Integral of g over the boundary arc with arc-length parameter in [t0, t1],
/// 0 <= t0 <= t1 <= L.
QuadratureResult boundary_integral(const ConvexDomain& domain, const std::function<double(Point)>& g,
                                   double t0, double t1, const QuadratureConfig& cfg = {});

/// (integral over the boundary of |f|^q)^(1/q), q in [1, inf).
QuadratureResult boundary_lq_norm(const ConvexDomain& domain, const std::function<Point(Point)>& f, double q,
                                  const QuadratureConfig& cfg = {});

struct SupNorm {
  double value = 0.0;
  double t = 0.0;  // arc-length location of the maximum
};

inline constexpr int kDefaultSupSamples = 8192;

/// max over the boundary of |f|, from dense sampling plus golden refinement.
SupNorm boundary_sup(const ConvexDomain& domain, const std::function<double(Point)>& f,
                     int samples = kDefaultSupSamples);
SupNorm boundary_sup_norm(const ConvexDomain& domain, const MonicPolynomial& p, int samples = kDefaultSupSamples);
SupNorm boundary_sup_norm_derivative(const ConvexDomain& domain, const MonicPolynomial& p,
                                     int samples = kDefaultSupSamples);

/// Arc-length interval [begin, end] of the boundary.
struct ParameterInterval {
  double begin = 0.0;
  double end = 0.0;
  double length() const { return end - begin; }
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct BoundaryMeasureReport {
  double q = 2.0;  // kInfinity for the sup norm
  double lq_norm_p = 0.0;
  double lq_norm_dp = 0.0;
  double sup_norm_p = 0.0;
  double oscillation = 0.0;  // lq_norm_dp / lq_norm_p
  double error_p = 0.0;      // absolute error estimates of the two norms
  double error_dp = 0.0;
  bool converged = true;
  std::vector<ParameterInterval> h_intervals;  // empty for q = inf
};

/// M_q(p) = |p'|_q / |p|_q on the boundary; q = kInfinity uses sup norms.
BoundaryMeasureReport oscillation_ratio(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                                        const QuadratureConfig& cfg = {});
/// Just the ratio, without the H-set (the optimizer's objective).
double oscillation_value(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                         const QuadratureConfig& cfg = {});

/// c(q) = (8 pi (q+1))^(-1/q).
double h_set_constant(double q);
/// Boundary parameters where |p| > c(q) n^(-2/q) |p|_inf, as closed
/// arc-length intervals inside [0, L].
std::vector<ParameterInterval> h_set(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                                     int samples = kDefaultSupSamples);

struct InequalityCheck {
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin() const { return lhs - rhs; }
  double ratio() const { return rhs > 0.0 ? lhs / rhs : kInfinity; }
};

/// Relative slack granted to quadrature noise when comparing the two sides.
inline constexpr double kCheckSlack = 1e-8;

/// |p|_q >= (d/(2(q+1)))^(1/q) |p|_inf n^(-2/q).
InequalityCheck nikolskii_check(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                                const QuadratureConfig& cfg = {});

struct HMassCheck {
  InequalityCheck mass;  // integral over H of |p|^q >= |p|_q^q / 2
  /// log(|p|_inf / |p(zeta)|) <= log(16 pi) + 2 log n on H; only run for n >= 8.
  std::optional<InequalityCheck> log_ratio;
};
HMassCheck h_mass_check(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                        const QuadratureConfig& cfg = {});

/// Gabriel's constant pi (e + 1) + e.
double gabriel_constant();

struct GabrielCheck {
  bool holds = true;
  double inner_integral = 0.0;
  double outer_integral = 0.0;
  double ratio = 0.0;  // inner / outer
};

/// integral over C of |p|^lambda <= (pi(e+1)+e) * integral over the boundary of |p|^lambda.
/// A segment C is traversed twice. Throws PreconditionError if C is not inside K.
GabrielCheck gabriel_check(const ConvexDomain& outer, const std::variant<ConvexDomain, Segment>& inner,
                           const MonicPolynomial& p, double lambda, const QuadratureConfig& cfg = {});

}  // namespace turan
