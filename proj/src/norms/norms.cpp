#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "../geometry/internal.hpp"
#include "turan/error.hpp"
#include "turan/norms.hpp"

namespace turan {

namespace {

constexpr double kPi = std::numbers::pi;

/// Sample positions in the native parameter: uniform grid plus every corner.
std::vector<double> sample_positions(const BoundaryParametrization& bd, int samples) {
  const double period = bd.native_period();
  std::vector<double> u;
  u.reserve(samples + bd.corners().size());
  for (int i = 0; i < samples; ++i) u.push_back(period * i / samples);
  for (double c : bd.corners()) u.push_back(bd.arclength_to_native(c));
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

double pow_abs(Point v, double q) { return q == 2.0 ? std::norm(v) : std::pow(std::abs(v), q); }

}  // namespace

SupNorm boundary_sup(const ConvexDomain& domain, const std::function<double(Point)>& f, int samples) {
  const auto& bd = domain.boundary();
  const double period = bd.native_period();
  const auto u = sample_positions(bd, std::max(16, samples));
  const std::size_t m = u.size();
  std::vector<double> val(m);
  for (std::size_t i = 0; i < m; ++i) val[i] = f(bd.native(u[i]).z);

  // Refine the few largest local maxima of the samples.
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < m; ++i) {
    const double prev = val[(i + m - 1) % m], next = val[(i + 1) % m];
    if (val[i] >= prev && val[i] >= next) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return val[a] > val[b]; });
  if (peaks.size() > 3) peaks.resize(3);

  SupNorm best{val[0], 0.0};
  double best_u = u[0];
  for (std::size_t i = 0; i < m; ++i) {
    if (val[i] > best.value) {
      best.value = val[i];
      best_u = u[i];
    }
  }
  for (std::size_t i : peaks) {
    double lo = i == 0 ? u[m - 1] - period : u[i - 1];
    double hi = i + 1 == m ? u[0] + period : u[i + 1];
    const auto [x, fx] = detail::golden_max([&](double s) { return f(bd.native(s).z); }, lo, hi, 1e-13 * period);
    if (fx > best.value) {
      best.value = fx;
      best_u = detail::wrap_period(x, period);
    }
  }
  best.t = bd.native_to_arclength(best_u);
  return best;
}

SupNorm boundary_sup_norm(const ConvexDomain& domain, const MonicPolynomial& p, int samples) {
  return boundary_sup(domain, [&](Point z) { return std::abs(p(z)); }, samples);
}

SupNorm boundary_sup_norm_derivative(const ConvexDomain& domain, const MonicPolynomial& p, int samples) {
  return boundary_sup(domain, [&](Point z) { return std::abs(p.derivative(z)); }, samples);
}

double oscillation_value(const ConvexDomain& domain, const MonicPolynomial& p, double q, const QuadratureConfig& cfg) {
  if (std::isinf(q)) {
    return boundary_sup_norm_derivative(domain, p).value / boundary_sup_norm(domain, p).value;
  }
  const auto ip = boundary_integral(domain, [&](Point z) { return pow_abs(p(z), q); }, cfg);
  const auto idp = boundary_integral(domain, [&](Point z) { return pow_abs(p.derivative(z), q); }, cfg);
  return std::pow(idp.value / ip.value, 1.0 / q);
}

BoundaryMeasureReport oscillation_ratio(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                                        const QuadratureConfig& cfg) {
  if (!(q >= 1.0)) throw PreconditionError("oscillation ratio needs q >= 1");
  BoundaryMeasureReport r;
  r.q = q;
  r.sup_norm_p = boundary_sup_norm(domain, p).value;
  if (std::isinf(q)) {
    r.lq_norm_p = r.sup_norm_p;
    r.lq_norm_dp = boundary_sup_norm_derivative(domain, p).value;
  } else {
    const auto np = boundary_lq_norm(domain, [&](Point z) { return p(z); }, q, cfg);
    const auto ndp = boundary_lq_norm(domain, [&](Point z) { return p.derivative(z); }, q, cfg);
    r.lq_norm_p = np.value;
    r.lq_norm_dp = ndp.value;
    r.error_p = np.error;
    r.error_dp = ndp.error;
    r.converged = np.converged && ndp.converged;
    r.h_intervals = h_set(domain, p, q);
  }
  r.oscillation = r.lq_norm_p > 0.0 ? r.lq_norm_dp / r.lq_norm_p : kInfinity;
  return r;
}

double h_set_constant(double q) { return std::pow(8.0 * kPi * (q + 1.0), -1.0 / q); }

std::vector<ParameterInterval> h_set(const ConvexDomain& domain, const MonicPolynomial& p, double q, int samples) {
  if (!(q >= 1.0) || std::isinf(q)) throw PreconditionError("H-set needs finite q >= 1");
  const auto& bd = domain.boundary();
  const double L = bd.length();
  const double period = bd.native_period();
  const double n = p.degree();
  const double threshold = h_set_constant(q) * std::pow(n, -2.0 / q) * boundary_sup_norm(domain, p, samples).value;
  auto inside = [&](double u) { return std::abs(p(bd.native(u).z)) > threshold; };

  auto u = sample_positions(bd, std::max(16, samples));
  u.push_back(period);
  const double tol = 1e-10 * period / L;
  auto crossing = [&](double lo, double hi, bool lo_inside) {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (inside(mid) == lo_inside ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  std::vector<ParameterInterval> out;
  bool state = inside(u[0]);
  double open = 0.0;
  for (std::size_t i = 1; i < u.size(); ++i) {
    const bool next = inside(u[i]);
    if (next == state) continue;
    const double x = bd.native_to_arclength(crossing(u[i - 1], u[i], state));
    if (state) {
      out.push_back({open, x});
    } else {
      open = x;
    }
    state = next;
  }
  if (state) out.push_back({open, L});
  return out;
}

InequalityCheck nikolskii_check(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                                const QuadratureConfig& cfg) {
  if (!(q >= 1.0) || std::isinf(q)) throw PreconditionError("Nikolskii check needs finite q >= 1");
  InequalityCheck c;
  c.lhs = boundary_lq_norm(domain, [&](Point z) { return p(z); }, q, cfg).value;
  const double d = diameter(domain);
  c.rhs = std::pow(d / (2.0 * (q + 1.0)), 1.0 / q) * boundary_sup_norm(domain, p).value *
          std::pow(static_cast<double>(p.degree()), -2.0 / q);
  c.holds = c.lhs >= c.rhs * (1.0 - kCheckSlack);
  return c;
}

HMassCheck h_mass_check(const ConvexDomain& domain, const MonicPolynomial& p, double q, const QuadratureConfig& cfg) {
  if (!(q >= 1.0) || std::isinf(q)) throw PreconditionError("H-mass check needs finite q >= 1");
  auto g = [&](Point z) { return pow_abs(p(z), q); };
  const double total = boundary_integral(domain, g, cfg).value;
  const auto intervals = h_set(domain, p, q);
  double on_h = 0.0;
  for (const auto& iv : intervals) on_h += boundary_integral(domain, g, iv.begin, iv.end, cfg).value;

  HMassCheck out;
  out.mass.lhs = on_h;
  out.mass.rhs = 0.5 * total;
  out.mass.holds = out.mass.lhs >= out.mass.rhs * (1.0 - kCheckSlack);

  const int n = p.degree();
  if (n >= 8) {
    const auto& bd = domain.boundary();
    const double sup = boundary_sup_norm(domain, p).value;
    double worst = 0.0;
    for (const auto& iv : intervals) {
      // H is open and the bound is attained at its ends when q = 1, so sample inside.
      const int k = 64;
      for (int i = 0; i < k; ++i) {
        const double t = iv.begin + iv.length() * (i + 0.5) / k;
        const double v = std::abs(p(bd.point(t)));
        if (v > 0.0) worst = std::max(worst, std::log(sup / v));
      }
    }
    InequalityCheck lr;
    lr.lhs = worst;
    lr.rhs = std::log(16.0 * kPi) + 2.0 * std::log(static_cast<double>(n));
    lr.holds = lr.lhs <= lr.rhs + kCheckSlack;
    out.log_ratio = lr;
  }
  return out;
}

double gabriel_constant() { return kPi * (std::numbers::e + 1.0) + std::numbers::e; }

GabrielCheck gabriel_check(const ConvexDomain& outer, const std::variant<ConvexDomain, Segment>& inner,
                           const MonicPolynomial& p, double lambda, const QuadratureConfig& cfg) {
  if (!(lambda >= 0.0)) throw PreconditionError("Gabriel check needs lambda >= 0");
  const double tol = 1e-12 * diameter(outer);
  auto g = [&](Point z) { return lambda == 0.0 ? 1.0 : std::pow(std::abs(p(z)), lambda); };

  GabrielCheck out;
  if (const auto* seg = std::get_if<Segment>(&inner)) {
    if (!outer.contains(seg->a, tol) || !outer.contains(seg->b, tol))
      throw PreconditionError("inner segment is not contained in the outer domain");
    const Point e = seg->b - seg->a;
    double err = 0.0;
    const double one_way = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double s) { return g(seg->a + s * e); }, 0.0, 1.0, static_cast<unsigned>(cfg.max_depth),
        cfg.relative_tolerance, &err);
    out.inner_integral = 2.0 * std::abs(e) * one_way;
  } else {
    const auto& c = std::get<ConvexDomain>(inner);
    if (const auto* poly = c.as_polygon()) {
      for (const Point& v : poly->vertices) {
        if (!outer.contains(v, tol)) throw PreconditionError("inner domain is not contained in the outer domain");
      }
    } else {
      const auto& bd = c.boundary();
      for (int i = 0; i < 256; ++i) {
        if (!outer.contains(bd.native(bd.native_period() * i / 256).z, tol))
          throw PreconditionError("inner domain is not contained in the outer domain");
      }
    }
    out.inner_integral = boundary_integral(c, g, cfg).value;
  }
  out.outer_integral = boundary_integral(outer, g, cfg).value;
  out.ratio = out.inner_integral / out.outer_integral;
  out.holds = out.inner_integral <= gabriel_constant() * out.outer_integral * (1.0 + kCheckSlack);
  return out;
}

}  // namespace turan
