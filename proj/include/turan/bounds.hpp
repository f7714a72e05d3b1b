#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/geometry.hpp"
#include "turan/norms.hpp"
#include "turan/polynomial.hpp"

namespace turan {

// Closed-form constants of the known inequalities |p'| >= c |p| (lower) and
// |p'| <= C |p| (upper).

double turan_disk(int n);                     // n/2
double turan_interval(int n);                 // sqrt(n)/6
double circular_bound(double R, int n);       // n/(2R)
double erod_ellipse(double b, int n);         // b n/2, semi-major axis 1
double levenberg_poletsky(double d, int n);   // sqrt(n)/(20 d)
double halasz_revesz(double w, double d, int n);  // 0.0003 w/d^2 n
/// n/(1+R) for R <= 1, n/(1+R^n) for R >= 1.
double malik_govil(double R, int n);
/// (Gamma(q/2+1) / (2 sqrt(pi) Gamma(q/2+1/2)))^(1/q) n/2.
double malik_lq_sup(double q, int n);
double gabriel_lower(double d);               // 1/(45.3 d)
double posdepth_bound(double h, double d, int n);  // h^4/(3000 d^5) n
/// h^4/(1500 2^(1/q) d^5) n; reported beside posdepth_bound, never aggregated.
double posdepth_bound_tight(double h, double d, int n, double q);

enum class BoundKind { Lower, Upper };
enum class NormKind { AnyQ, SupOnly };

struct BoundCertificate {
  std::string name;
  BoundKind kind = BoundKind::Lower;
  NormKind norm = NormKind::AnyQ;
  bool applicable = false;
  std::string reason;
  std::optional<double> value;  // present iff applicable
  bool aggregated = true;       // takes part in the maximum
  std::string source;           // attribution of the inequality
};

struct LowerBoundSummary {
  std::vector<BoundCertificate> certificates;
  double best = 0.0;
  std::string best_name;
};

/// All lower certificates for M_q over degree-n polynomials on K; q = kInfinity
/// adds the sup-norm-only ones.
LowerBoundSummary best_lower_bound(const ConvexDomain& domain, int n, double q, const SmoothGridConfig& cfg = {});

struct PointwiseCheck {
  bool holds = true;
  int checked = 0;
  double worst_ratio = kInfinity;  // min over samples of |p'(zeta)| / (h^4/(1500 d^5) n |p(zeta)|)
  double worst_t = 0.0;
  Point worst_zeta;
  std::optional<double> failing_t;  // first failing arc-length parameter
  std::optional<Point> failing_zeta;
};

/// |p'(zeta)| >= h(zeta)^4/(1500 d^5) n |p(zeta)| on sampled points of the H-set,
/// with h(zeta) the local depth.
PointwiseCheck localdepth_pointwise_check(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                                          int samples = 512, const SmoothGridConfig& cfg = {});

/// f(t) = (1/t) log((1-3t)/(1-6t)) - 4 log(4 pi) t + 16 t log t and its derivative.
double f_value(double t);
double f_derivative(double t);

struct FCheckReport {
  double min_value = 0.0;
  double argmin = 0.0;
  double tau = 0.078628;
  double f_tau = 0.0;
  double fprime_tau = 0.0;
  double fprime_tau_numeric = 0.0;  // central difference, step 1e-7
  double supporting_line = 0.0;     // f(tau) + f'(tau) (1/8 - tau)
  double min_second_difference = 0.0;
  bool convex = true;               // normalized second differences >= -1e-9
  bool above_threshold = true;      // min_value > 0.7 and supporting_line > 0.7
};

FCheckReport f_check(int grid_size = 20000);

struct UpperConstruction {
  MonicPolynomial polynomial;
  Point z0;
  double certificate = 0.0;  // (4 pi + 2) n / d
  double explicit_constant = 0.0;  // 2 (L + d) n / d^2
  double measured = 0.0;     // M_q of the polynomial
  bool holds = true;
};

/// p = (z - z0)^n with z0 an endpoint of a diameter.
UpperConstruction upper_construction(const ConvexDomain& domain, int n, double q, const QuadratureConfig& cfg = {});

std::string_view to_string(BoundKind k) noexcept;
std::string_view to_string(NormKind k) noexcept;

}  // namespace turan
