#include "turan/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "turan/error.hpp"

namespace turan {

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json point(Point z) { return Json::array({number(z.real()), number(z.imag())}); }

namespace {

Json points(const std::vector<Point>& zs) {
  Json a = Json::array();
  for (const Point& z : zs) a.push_back(point(z));
  return a;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  Json j = *v;
  return j;
}

Json optional_number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

std::string field_path(const std::string& field) { return "field '" + field + "'"; }

double get_number(const Json& j, const std::string& field) {
  if (!j.contains(field)) throw InvalidInput("missing " + field_path(field));
  const auto& v = j.at(field);
  if (!v.is_number()) throw InvalidInput(field_path(field) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InvalidInput(field_path(field) + " must be finite");
  return x;
}

Point get_point(const Json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw InvalidInput(field_path(field) + " must be a pair [x, y] of numbers");
  const Point z{v[0].get<double>(), v[1].get<double>()};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidInput(field_path(field) + " must be finite");
  return z;
}

Point get_point_field(const Json& j, const std::string& field) {
  if (!j.contains(field)) throw InvalidInput("missing " + field_path(field));
  return get_point(j.at(field), field);
}

std::string get_type(const Json& j) {
  if (!j.is_object()) throw InvalidInput("document must be an object");
  if (!j.contains("type") || !j.at("type").is_string()) throw InvalidInput("missing " + field_path("type"));
  return j.at("type").get<std::string>();
}

}  // namespace

void to_json(Json& j, const RunManifest& m) {
  j = Json{{"command", m.command}, {"inputs", m.inputs}, {"config", m.config}, {"version", m.version}};
  if (m.timestamp) j["timestamp"] = *m.timestamp;
}

void to_json(Json& j, const GeometrySummary& s) {
  j = Json{{"diameter", number(s.diameter)},
           {"width", number(s.width)},
           {"perimeter", number(s.perimeter)},
           {"depth", number(s.depth)},
           {"largest_supplementary_angle", number(s.largest_supplementary)},
           {"mu", number(s.mu)},
           {"classification", std::string(to_string(s.classification))},
           {"circularity_radius", optional_number(s.circularity_radius)}};
}

void to_json(Json& j, const BoundaryMeasureReport& r) {
  Json h = Json::array();
  for (const auto& iv : r.h_intervals) h.push_back(Json::array({number(iv.begin), number(iv.end)}));
  j = Json{{"q", number(r.q)},
           {"lq_norm_p", number(r.lq_norm_p)},
           {"lq_norm_dp", number(r.lq_norm_dp)},
           {"sup_norm_p", number(r.sup_norm_p)},
           {"oscillation", number(r.oscillation)},
           {"error_p", number(r.error_p)},
           {"error_dp", number(r.error_dp)},
           {"converged", r.converged},
           {"h_intervals", h}};
}

void to_json(Json& j, const InequalityCheck& c) {
  j = Json{{"holds", c.holds}, {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"margin", number(c.margin())}};
}

void to_json(Json& j, const HMassCheck& c) { j = Json{{"mass", c.mass}, {"log_ratio", optional_json(c.log_ratio)}}; }

void to_json(Json& j, const GabrielCheck& c) {
  j = Json{{"holds", c.holds},
           {"inner_integral", number(c.inner_integral)},
           {"outer_integral", number(c.outer_integral)},
           {"ratio", number(c.ratio)}};
}

void to_json(Json& j, const PointwiseCheck& c) {
  j = Json{{"holds", c.holds},
           {"checked", c.checked},
           {"worst_ratio", number(c.worst_ratio)},
           {"worst_t", number(c.worst_t)},
           {"worst_zeta", point(c.worst_zeta)},
           {"failing_t", optional_number(c.failing_t)},
           {"failing_zeta", c.failing_zeta ? point(*c.failing_zeta) : Json(nullptr)}};
}

void to_json(Json& j, const BoundCertificate& c) {
  j = Json{{"name", c.name},
           {"kind", std::string(to_string(c.kind))},
           {"norm", std::string(to_string(c.norm))},
           {"applicable", c.applicable},
           {"reason", c.reason},
           {"value", optional_number(c.value)},
           {"aggregated", c.aggregated},
           {"source", c.source}};
}

void to_json(Json& j, const LowerBoundSummary& s) {
  j = Json{{"best", number(s.best)}, {"best_name", s.best_name}, {"certificates", s.certificates}};
}

void to_json(Json& j, const FCheckReport& r) {
  j = Json{{"min_value", number(r.min_value)},
           {"argmin", number(r.argmin)},
           {"tau", number(r.tau)},
           {"f_tau", number(r.f_tau)},
           {"fprime_tau", number(r.fprime_tau)},
           {"fprime_tau_numeric", number(r.fprime_tau_numeric)},
           {"supporting_line", number(r.supporting_line)},
           {"min_second_difference", number(r.min_second_difference)},
           {"convex", r.convex},
           {"above_threshold", r.above_threshold}};
}

void to_json(Json& j, const UpperConstruction& u) {
  j = Json{{"z0", point(u.z0)},
           {"degree", u.polynomial.degree()},
           {"certificate", number(u.certificate)},
           {"explicit_constant", number(u.explicit_constant)},
           {"measured", number(u.measured)},
           {"holds", u.holds}};
}

void to_json(Json& j, const SearchResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace) {
    trace.push_back(Json{{"restart", t.index},
                         {"seed", t.seed},
                         {"value", number(t.value)},
                         {"iterations", t.iterations},
                         {"converged", t.converged}});
  }
  j = Json{{"zeros", points(r.zeros)},
           {"value", number(r.value)},
           {"best_restart", r.best_restart},
           {"lower_bound", number(r.lower_bound)},
           {"lower_bound_name", r.lower_bound_name},
           {"margin", number(r.margin)},
           {"violation", r.violation},
           {"trace", trace}};
}

void to_json(Json& j, const SuiteEntry& e) {
  j = Json{{"n", e.n},
           {"q", number(e.q)},
           {"passed", e.passed},
           {"failures", e.failures},
           {"search", e.search},
           {"lower_bound_holds", e.lower_bound_holds},
           {"nikolskii", optional_json(e.nikolskii)},
           {"h_mass", optional_json(e.h_mass)},
           {"gabriel", optional_json(e.gabriel)},
           {"pointwise", optional_json(e.pointwise)},
           {"upper", optional_json(e.upper)}};
}

void to_json(Json& j, const SuiteReport& r) {
  j = Json{{"passed", r.passed}, {"failures", r.failures}, {"entries", r.entries}};
}

void to_json(Json& j, const FeketeEstimate& e) {
  j = Json{{"m", e.m},
           {"delta", number(e.delta)},
           {"chebyshev_estimate", number(e.chebyshev_estimate)},
           {"best_restart", e.best_restart},
           {"sweeps", e.sweeps},
           {"converged", e.converged},
           {"points", points(e.points)}};
}

std::string render_report(const RunManifest& manifest, const Json& result) {
  Json doc{{"manifest", manifest}, {"result", result}};
  return doc.dump(2) + "\n";
}

ConvexDomain parse_domain(const Json& j) {
  const std::string type = get_type(j);
  if (type == "polygon") {
    if (!j.contains("vertices") || !j.at("vertices").is_array()) throw InvalidInput("missing " + field_path("vertices"));
    std::vector<Point> v;
    for (std::size_t i = 0; i < j.at("vertices").size(); ++i)
      v.push_back(get_point(j.at("vertices")[i], "vertices[" + std::to_string(i) + "]"));
    return ConvexDomain::polygon(std::move(v));
  }
  if (type == "disk") return ConvexDomain::disk(get_point_field(j, "center"), get_number(j, "radius"));
  if (type == "ellipse") {
    const double rotation = j.contains("rotation") ? get_number(j, "rotation") : 0.0;
    return ConvexDomain::ellipse(get_point_field(j, "center"), get_number(j, "a"), get_number(j, "b"), rotation);
  }
  throw InvalidInput(field_path("type") + " must be polygon, disk or ellipse, got '" + type + "'");
}

CompactSet parse_compact_set(const Json& j) {
  const std::string type = get_type(j);
  CompactSet set;
  if (type == "segment") {
    set = Segment{get_point_field(j, "a"), get_point_field(j, "b")};
  } else if (type == "intervals") {
    if (!j.contains("intervals") || !j.at("intervals").is_array())
      throw InvalidInput("missing " + field_path("intervals"));
    RealIntervals iv;
    for (std::size_t i = 0; i < j.at("intervals").size(); ++i) {
      const Point p = get_point(j.at("intervals")[i], "intervals[" + std::to_string(i) + "]");
      iv.intervals.emplace_back(p.real(), p.imag());
    }
    set = iv;
  } else {
    set = parse_domain(j);
  }
  validate(set);
  return set;
}

ZeroSet parse_zeros(const Json& j) {
  if (!j.is_object() || !j.contains("zeros") || !j.at("zeros").is_array())
    throw InvalidInput("missing " + field_path("zeros"));
  ZeroSet z;
  for (std::size_t i = 0; i < j.at("zeros").size(); ++i)
    z.push_back(get_point(j.at("zeros")[i], "zeros[" + std::to_string(i) + "]"));
  if (z.empty()) throw InvalidInput(field_path("zeros") + " must not be empty");
  return z;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

double parse_q(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return kInfinity;
  std::size_t used = 0;
  double q = 0.0;
  try {
    q = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("q must be a number or 'inf', got '" + text + "'");
  }
  if (used != text.size()) throw InvalidInput("q must be a number or 'inf', got '" + text + "'");
  if (!(q >= 1.0)) throw InvalidInput("q must be at least 1");
  return q;
}

namespace {

std::string csv_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

void write_trace_csv(std::ostream& os, const SearchResult& r) {
  os << "restart,seed,value,iterations,converged\n";
  for (const auto& t : r.trace) {
    os << t.index << ',' << t.seed << ',' << csv_number(t.value) << ',' << t.iterations << ','
       << (t.converged ? "true" : "false") << '\n';
  }
}

void write_suite_csv(std::ostream& os, const SuiteReport& r) {
  os << "n,q,best_value,lower_bound,lower_bound_name,upper_certificate,upper_measured,passed\n";
  for (const auto& e : r.entries) {
    os << e.n << ',' << csv_number(e.q) << ',' << csv_number(e.search.value) << ','
       << csv_number(e.search.lower_bound) << ',' << e.search.lower_bound_name << ','
       << csv_number(e.upper->certificate) << ',' << csv_number(e.upper->measured) << ','
       << (e.passed ? "true" : "false") << '\n';
  }
}

}  // namespace turan
