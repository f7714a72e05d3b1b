#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "turan/norms.hpp"

namespace turan {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;

/// Integral over native parameters [u0, u1], split at the smooth pieces.
QuadratureResult native_integral(const BoundaryParametrization& bd, const std::function<double(Point)>& g, double u0,
                                 double u1, const QuadratureConfig& cfg) {
  QuadratureResult out;
  if (!(u1 > u0)) return out;
  auto integrand = [&](double u) {
    const auto s = bd.native(u);
    return g(s.z) * std::abs(s.dz);
  };
  const int panels = std::max(1, cfg.initial_panels);
  for (const auto& [a, b] : bd.native_pieces()) {
    const double lo = std::max(a, u0), hi = std::min(b, u1);
    if (!(hi > lo)) continue;
    const double h = (hi - lo) / panels;
    for (int k = 0; k < panels; ++k) {
      const double pa = lo + k * h, pb = k + 1 == panels ? hi : lo + (k + 1) * h;
      double err = 0.0, l1 = 0.0;
      const double v = Rule::integrate(integrand, pa, pb, static_cast<unsigned>(cfg.max_depth),
                                       cfg.relative_tolerance, &err, &l1);
      out.value += v;
      out.error += err;
      if (err > cfg.relative_tolerance * l1 && err > 1e-300) out.converged = false;
    }
  }
  return out;
}

}  // namespace

QuadratureResult boundary_integral(const ConvexDomain& domain, const std::function<double(Point)>& g,
                                   const QuadratureConfig& cfg) {
  const auto& bd = domain.boundary();
  return native_integral(bd, g, 0.0, bd.native_period(), cfg);
}

QuadratureResult boundary_integral(const ConvexDomain& domain, const std::function<double(Point)>& g, double t0,
                                   double t1, const QuadratureConfig& cfg) {
  const auto& bd = domain.boundary();
  const double L = bd.length();
  t0 = std::clamp(t0, 0.0, L);
  t1 = std::clamp(t1, 0.0, L);
  const double u0 = t0 >= L ? bd.native_period() : bd.arclength_to_native(t0);
  const double u1 = t1 >= L ? bd.native_period() : bd.arclength_to_native(t1);
  return native_integral(bd, g, u0, u1, cfg);
}

QuadratureResult boundary_lq_norm(const ConvexDomain& domain, const std::function<Point(Point)>& f, double q,
                                  const QuadratureConfig& cfg) {
  auto g = [&](Point z) { return std::pow(std::abs(f(z)), q); };
  auto r = boundary_integral(domain, g, cfg);
  const double norm = std::pow(r.value, 1.0 / q);
  // d(x^(1/q)) = x^(1/q - 1)/q dx
  const double err = r.value > 0.0 ? norm / (q * r.value) * r.error : 0.0;
  return {norm, err, r.converged};
}

}  // namespace turan
