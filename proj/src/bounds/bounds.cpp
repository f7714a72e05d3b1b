#include "turan/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "turan/error.hpp"

namespace turan {

namespace {

constexpr double kPi = std::numbers::pi;

void require_degree(int n) {
  if (n < 1) throw InvalidInput("degree must be at least 1");
}
void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw InvalidInput(std::string(what) + " must be positive");
}

BoundCertificate lower(std::string name, NormKind norm, std::string source) {
  BoundCertificate c;
  c.name = std::move(name);
  c.kind = BoundKind::Lower;
  c.norm = norm;
  c.source = std::move(source);
  return c;
}

void set_value(BoundCertificate& c, double v, std::string reason) {
  c.applicable = true;
  c.value = v;
  c.reason = std::move(reason);
}

void set_inapplicable(BoundCertificate& c, std::string reason) {
  c.applicable = false;
  c.value.reset();
  c.reason = std::move(reason);
}

}  // namespace

double turan_disk(int n) {
  require_degree(n);
  return n / 2.0;
}

double turan_interval(int n) {
  require_degree(n);
  return std::sqrt(static_cast<double>(n)) / 6.0;
}

double circular_bound(double R, int n) {
  require_degree(n);
  require_positive(R, "circularity radius");
  return n / (2.0 * R);
}

double erod_ellipse(double b, int n) {
  require_degree(n);
  if (!(b > 0.0 && b <= 1.0)) throw InvalidInput("ellipse semi-minor axis must be in (0, 1]");
  return b * n / 2.0;
}

double levenberg_poletsky(double d, int n) {
  require_degree(n);
  require_positive(d, "diameter");
  return std::sqrt(static_cast<double>(n)) / (20.0 * d);
}

double halasz_revesz(double w, double d, int n) {
  require_degree(n);
  require_positive(w, "width");
  require_positive(d, "diameter");
  return 0.0003 * w / (d * d) * n;
}

double malik_govil(double R, int n) {
  require_degree(n);
  if (!(R >= 0.0)) throw InvalidInput("radius must be nonnegative");
  return R <= 1.0 ? n / (1.0 + R) : n / (1.0 + std::pow(R, n));
}

double malik_lq_sup(double q, int n) {
  require_degree(n);
  if (!(q > 0.0) || std::isinf(q)) throw InvalidInput("q must be finite and positive");
  // Ratio of Gammas through lgamma so large q does not overflow.
  const double ratio = std::exp(std::lgamma(q / 2.0 + 1.0) - std::lgamma(q / 2.0 + 0.5)) / (2.0 * std::sqrt(kPi));
  return std::pow(ratio, 1.0 / q) * n / 2.0;
}

double gabriel_lower(double d) {
  require_positive(d, "diameter");
  return 1.0 / (45.3 * d);
}

double posdepth_bound(double h, double d, int n) {
  require_degree(n);
  require_positive(d, "diameter");
  if (!(h >= 0.0)) throw InvalidInput("depth must be nonnegative");
  return std::pow(h, 4) / (3000.0 * std::pow(d, 5)) * n;
}

double posdepth_bound_tight(double h, double d, int n, double q) {
  require_degree(n);
  require_positive(d, "diameter");
  if (!(h >= 0.0)) throw InvalidInput("depth must be nonnegative");
  if (!(q >= 1.0)) throw InvalidInput("q must be at least 1");
  const double two_q = std::isinf(q) ? 1.0 : std::pow(2.0, 1.0 / q);
  return std::pow(h, 4) / (1500.0 * two_q * std::pow(d, 5)) * n;
}

LowerBoundSummary best_lower_bound(const ConvexDomain& domain, int n, double q, const SmoothGridConfig& cfg) {
  require_degree(n);
  if (!(q >= 1.0)) throw InvalidInput("q must be at least 1");
  const bool sup = std::isinf(q);
  const double d = diameter(domain);
  const double h = global_depth(domain, cfg);
  const double w = width(domain);
  const auto R = circularity_radius(domain);

  LowerBoundSummary out;
  auto& certs = out.certificates;

  auto c = lower("circular", NormKind::AnyQ, "Erdelyi-type bound for R-circular domains");
  if (R) {
    set_value(c, circular_bound(*R, n), "domain is R-circular with R = " + std::to_string(*R));
  } else {
    set_inapplicable(c, "domain is not R-circular");
  }
  certs.push_back(c);

  c = lower("posdepth", NormKind::AnyQ, "fixed positive depth bound h^4/(3000 d^5) n");
  set_value(c, posdepth_bound(h, d, n), h > 0.0 ? "depth h_K > 0" : "vacuous: depth h_K = 0");
  certs.push_back(c);

  c = lower("posdepth_tight", NormKind::AnyQ, "same argument with 2^(1/q) kept: h^4/(1500 2^(1/q) d^5) n");
  set_value(c, posdepth_bound_tight(h, d, n, q), "reported only, not aggregated");
  c.aggregated = false;
  certs.push_back(c);

  c = lower("gabriel_lower", NormKind::AnyQ, "n-independent floor from Gabriel's comparison lemma");
  set_value(c, gabriel_lower(d), "any compact convex domain");
  certs.push_back(c);

  c = lower("halasz_revesz", NormKind::SupOnly, "Halasz-Revesz (2018)");
  if (sup) {
    set_value(c, halasz_revesz(w, d, n), "any compact convex domain, sup norm");
  } else {
    set_inapplicable(c, "proved for the sup norm only");
  }
  certs.push_back(c);

  c = lower("levenberg_poletsky", NormKind::SupOnly, "Levenberg-Poletsky (2002)");
  if (sup) {
    set_value(c, levenberg_poletsky(d, n), "any compact convex set, sup norm");
  } else {
    set_inapplicable(c, "proved for the sup norm only");
  }
  certs.push_back(c);

  c = lower("erod_ellipse", NormKind::SupOnly, "Erod (1939)");
  if (const auto* e = domain.as_ellipse(); e && sup) {
    // Scaled from the a = 1 normalization.
    set_value(c, erod_ellipse(e->b / e->a, n) / e->a, "ellipse, sup norm");
  } else {
    set_inapplicable(c, sup ? "domain is not an ellipse" : "proved for the sup norm only");
  }
  certs.push_back(c);

  c = lower("turan_disk", NormKind::SupOnly, "Turan (1939)");
  if (const auto* disk = domain.as_disk(); disk && sup && std::abs(disk->radius - 1.0) <= 1e-12) {
    set_value(c, turan_disk(n), "unit disk, sup norm");
  } else {
    set_inapplicable(c, sup ? "domain is not the unit disk" : "proved for the sup norm only");
  }
  certs.push_back(c);

  c = lower("turan_interval", NormKind::SupOnly, "Turan (1939)");
  set_inapplicable(c, "stated for the interval [-1, 1], not a domain");
  certs.push_back(c);

  for (const auto& cert : certs) {
    if (cert.applicable && cert.aggregated && *cert.value > out.best) {
      out.best = *cert.value;
      out.best_name = cert.name;
    }
  }
  return out;
}

PointwiseCheck localdepth_pointwise_check(const ConvexDomain& domain, const MonicPolynomial& p, double q, int samples,
                                          const SmoothGridConfig& cfg) {
  const auto intervals = h_set(domain, p, q);
  const auto& bd = domain.boundary();
  const double d = diameter(domain);
  const double n = p.degree();
  double total = 0.0;
  for (const auto& iv : intervals) total += iv.length();

  PointwiseCheck out;
  std::vector<double> ts;
  if (total > 0.0) {
    for (int i = 0; i < samples; ++i) {
      double s = total * (i + 0.5) / samples;
      for (const auto& iv : intervals) {
        if (s <= iv.length()) {
          ts.push_back(iv.begin + s);
          break;
        }
        s -= iv.length();
      }
    }
  } else {
    for (const auto& iv : intervals) ts.push_back(iv.begin);
  }
  for (double t : ts) {
    const Point zeta = bd.point(t);
    const double h = local_depth(domain, t, cfg);
    const auto jet = p.jet(zeta);
    const double rhs = std::pow(h, 4) / (1500.0 * std::pow(d, 5)) * n * std::abs(jet.value);
    const double lhs = std::abs(jet.derivative);
    ++out.checked;
    const double ratio = rhs > 0.0 ? lhs / rhs : kInfinity;
    if (ratio < out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_t = t;
      out.worst_zeta = zeta;
    }
    if (lhs < rhs * (1.0 - kCheckSlack) && out.holds) {
      out.holds = false;
      out.failing_t = t;
      out.failing_zeta = zeta;
    }
  }
  return out;
}

double f_value(double t) {
  if (!(t > 0.0 && t < 1.0 / 6.0)) throw InvalidInput("f is defined on (0, 1/6)");
  // log((1-3t)/(1-6t)) = log1p(3t/(1-6t))
  return std::log1p(3.0 * t / (1.0 - 6.0 * t)) / t - 4.0 * std::log(4.0 * kPi) * t + 16.0 * t * std::log(t);
}

double f_derivative(double t) {
  if (!(t > 0.0 && t < 1.0 / 6.0)) throw InvalidInput("f is defined on (0, 1/6)");
  return -std::log1p(3.0 * t / (1.0 - 6.0 * t)) / (t * t) + (-3.0 / (1.0 - 3.0 * t) + 6.0 / (1.0 - 6.0 * t)) / t -
         4.0 * std::log(4.0 * kPi) + 16.0 + 16.0 * std::log(t);
}

FCheckReport f_check(int grid_size) {
  if (grid_size < 1000) throw InvalidInput("f check needs at least 1000 grid points");
  const double end = 0.125;
  std::vector<double> t;
  const int half = grid_size / 2;
  const double lo = 1e-8;
  for (int i = 0; i < half; ++i) t.push_back(lo * std::pow(end / lo, static_cast<double>(i) / (half - 1)));
  for (int i = 1; i <= grid_size - half; ++i) t.push_back(end * i / (grid_size - half));
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());

  FCheckReport r;
  std::vector<double> f(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) f[i] = f_value(t[i]);
  const auto it = std::min_element(f.begin(), f.end());
  r.min_value = *it;
  r.argmin = t[static_cast<std::size_t>(it - f.begin())];

  r.min_second_difference = kInfinity;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const double x0 = t[i - 1], x1 = t[i], x2 = t[i + 1];
    const double dd = ((f[i + 1] - f[i]) / (x2 - x1) - (f[i] - f[i - 1]) / (x1 - x0)) / (x2 - x0);
    // Scaled so a uniform grid gives f0 - 2 f1 + f2.
    const double half_span = 0.5 * (x2 - x0);
    r.min_second_difference = std::min(r.min_second_difference, 2.0 * dd * half_span * half_span);
  }
  r.convex = r.min_second_difference >= -1e-9;

  r.f_tau = f_value(r.tau);
  r.fprime_tau = f_derivative(r.tau);
  const double step = 1e-7;
  r.fprime_tau_numeric = (f_value(r.tau + step) - f_value(r.tau - step)) / (2.0 * step);
  r.supporting_line = r.f_tau + r.fprime_tau * (end - r.tau);
  r.above_threshold = r.min_value > 0.7 && r.supporting_line > 0.7;
  return r;
}

UpperConstruction upper_construction(const ConvexDomain& domain, int n, double q, const QuadratureConfig& cfg) {
  require_degree(n);
  if (!(q >= 1.0)) throw InvalidInput("q must be at least 1");
  const auto [z0, z1] = diameter_endpoints(domain);
  (void)z1;
  const double d = diameter(domain);
  const double L = perimeter(domain);
  UpperConstruction u{MonicPolynomial(ZeroSet(static_cast<std::size_t>(n), z0)), z0};
  u.certificate = (4.0 * kPi + 2.0) * n / d;
  u.explicit_constant = 2.0 * (L + d) * n / (d * d);
  u.measured = oscillation_value(domain, u.polynomial, q, cfg);
  u.holds = u.measured <= u.certificate * (1.0 + kCheckSlack);
  return u;
}

std::string_view to_string(BoundKind k) noexcept { return k == BoundKind::Lower ? "lower" : "upper"; }
std::string_view to_string(NormKind k) noexcept { return k == NormKind::AnyQ ? "q" : "sup"; }

}  // namespace turan
