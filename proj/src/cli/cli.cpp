#include "turan/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "turan/error.hpp"
#include "turan/report.hpp"

namespace turan {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidInput(std::string(what) + ": expected an integer, got '" + s + "'");
  return v;
}

/// "a..b" or a comma list.
std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  if (const auto pos = text.find(".."); pos != std::string::npos) {
    const int a = parse_int(text.substr(0, pos), "--n");
    const int b = parse_int(text.substr(pos + 2), "--n");
    if (a < 1 || b < a) throw InvalidInput("--n range must satisfy 1 <= a <= b");
    for (int n = a; n <= b; ++n) out.push_back(n);
    return out;
  }
  for (const auto& part : split(text, ',')) {
    const int n = parse_int(part, "--n");
    if (n < 1) throw InvalidInput("--n entries must be at least 1");
    out.push_back(n);
  }
  if (out.empty()) throw InvalidInput("--n is empty");
  return out;
}

std::vector<double> parse_q_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_q(part));
  if (out.empty()) throw InvalidInput("--q is empty");
  return out;
}

Json quadrature_config(const QuadratureConfig& q) {
  return Json{{"initial_panels", q.initial_panels},
              {"relative_tolerance", q.relative_tolerance},
              {"max_depth", q.max_depth}};
}

std::string format_line(bool ok, const std::string& what) { return std::string(ok ? "PASS " : "FAIL ") + what; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

struct Options {
  bool timestamp = false;
  std::string domain_path;
  std::string zeros_path;
  std::string q_text = "2";
  double zero_tol = 1e-9;
  std::string n_text;
  int n = 1;
  SearchConfig search;
  std::string csv_path;
  int grid = SmoothGridConfig{}.grid;
  int m = 64;
  int fekete_restarts = FeketeConfig{}.restarts;
  std::uint64_t seed = 0;
  int minimax_k = 0;
};

RunManifest manifest(const Options& o, std::string command, std::vector<std::string> inputs, Json config) {
  RunManifest m;
  m.command = std::move(command);
  m.inputs = std::move(inputs);
  m.config = std::move(config);
  if (o.timestamp) m.timestamp = utc_timestamp();
  return m;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto domain = parse_domain(read_json_file(o.domain_path));
  SmoothGridConfig cfg;
  cfg.grid = o.grid;
  const auto summary = summarize(domain, cfg);
  Json result{{"domain", std::string(domain.kind())}, {"summary", summary}};
  out << render_report(manifest(o, "analyze", {o.domain_path}, Json{{"grid", cfg.grid}}), result);
  return kExitOk;
}

int cmd_oscillation(const Options& o, std::ostream& out) {
  const auto domain = parse_domain(read_json_file(o.domain_path));
  const auto zeros = parse_zeros(read_json_file(o.zeros_path));
  const double q = parse_q(o.q_text);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!domain.contains(zeros[i], o.zero_tol)) {
      throw PreconditionError("zero " + std::to_string(i) + " at [" + fmt(zeros[i].real()) + ", " +
                              fmt(zeros[i].imag()) + "] lies outside the domain");
    }
  }
  const MonicPolynomial p(zeros);
  const QuadratureConfig qc;
  const auto report = oscillation_ratio(domain, p, q, qc);
  Json config{{"q", number(q)}, {"zero_tolerance", o.zero_tol}, {"quadrature", quadrature_config(qc)}};
  out << render_report(manifest(o, "oscillation", {o.domain_path, o.zeros_path}, config), report);
  return kExitOk;
}

Json search_config(const SearchConfig& c) {
  return Json{{"restarts", c.restarts},
              {"max_iterations", c.max_iterations},
              {"seed", c.seed},
              {"tolerance", c.tolerance},
              {"projection", "nearest-point"},
              {"quadrature", quadrature_config(c.quadrature)}};
}

void write_csv(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write '" + path + "'");
  body(f);
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto domain = parse_domain(read_json_file(o.domain_path));
  const double q = parse_q(o.q_text);
  if (o.n < 1) throw InvalidInput("--n must be at least 1");
  const auto result = minimize_oscillation(domain, o.n, q, o.search);
  Json config = search_config(o.search);
  config["n"] = o.n;
  config["q"] = number(q);
  write_csv(o.csv_path, [&](std::ostream& f) { write_trace_csv(f, result); });
  out << render_report(manifest(o, "search", {o.domain_path}, config), result);
  return result.violation ? kExitInequality : kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto domain = parse_domain(read_json_file(o.domain_path));
  const auto degrees = parse_degrees(o.n_text);
  const auto qs = parse_q_list(o.q_text);

  const auto geometry = summarize(domain);
  const auto fc = f_check(100000);
  const auto suite = verify_bounds(domain, degrees, qs, o.search);

  std::vector<std::string> lines;
  const bool geometry_ok = geometry.depth >= geometry.mu - 1e-9 * geometry.diameter;
  lines.push_back(format_line(geometry_ok, "geometry h_K=" + fmt(geometry.depth) + " >= mu_K=" + fmt(geometry.mu)));
  const bool f_ok = fc.above_threshold && fc.convex;
  lines.push_back(format_line(f_ok, "f_check min=" + fmt(fc.min_value) + " at t=" + fmt(fc.argmin) +
                                        " supporting_line=" + fmt(fc.supporting_line) + " > 0.7"));
  for (const auto& e : suite.entries) {
    std::string what = "n=" + std::to_string(e.n) + " q=" + fmt(e.q) + " best=" + fmt(e.search.value) +
                       " lower=" + fmt(e.search.lower_bound) + " (" + e.search.lower_bound_name + ")";
    if (!e.failures.empty()) {
      what += " failed:";
      for (const auto& f : e.failures) what += " " + f;
    }
    lines.push_back(format_line(e.passed, what));
  }
  for (const auto& l : lines) err << l << '\n';

  Json config = search_config(o.search);
  config["n"] = degrees;
  Json qj = Json::array();
  for (double q : qs) qj.push_back(number(q));
  config["q"] = qj;
  config["f_grid"] = 100000;
  write_csv(o.csv_path, [&](std::ostream& f) { write_suite_csv(f, suite); });
  Json result{{"geometry", geometry}, {"f_check", fc}, {"suite", suite}, {"summary", lines}};
  out << render_report(manifest(o, "verify", {o.domain_path}, config), result);
  return geometry_ok && f_ok && suite.passed ? kExitOk : kExitInequality;
}

std::string set_kind(const CompactSet& set) {
  if (std::holds_alternative<Segment>(set)) return "segment";
  if (std::holds_alternative<RealIntervals>(set)) return "intervals";
  return std::string(std::get<ConvexDomain>(set).kind());
}

int cmd_capacity(const Options& o, std::ostream& out) {
  const auto set = parse_compact_set(read_json_file(o.domain_path));
  if (o.m < 2) throw InvalidInput("--m must be at least 2");
  FeketeConfig fc;
  fc.restarts = o.fekete_restarts;
  const auto exact = transfinite_diameter_exact(set);
  const auto fekete = transfinite_diameter_fekete(set, o.m, o.seed, fc);

  Json result{{"set", set_kind(set)}, {"exact", exact ? number(*exact) : Json(nullptr)}, {"fekete", fekete}};
  if (exact) {
    result["delta_relative_error"] = number((fekete.delta - *exact) / *exact);
    result["estimate_relative_error"] = number((fekete.chebyshev_estimate - *exact) / *exact);
  }
  if (const auto* iv = std::get_if<RealIntervals>(&set)) {
    const auto polya = polya_check(*iv, o.m, o.seed, fc);
    result["polya"] = Json{{"total_length", number(polya.total_length)},
                           {"delta", number(polya.delta)},
                           {"holds", polya.holds},
                           {"margin", number(polya.margin)},
                           {"low_margin", polya.low_margin}};
  }
  if (o.minimax_k > 0) {
    const auto mm = chebyshev_min_norm_numeric(set, o.minimax_k, o.seed);
    Json zs = Json::array();
    for (const Point& z : mm.zeros) zs.push_back(point(z));
    result["minimax"] = Json{{"k", o.minimax_k}, {"value", number(mm.value)}, {"converged", mm.converged}, {"zeros", zs}};
  }
  Json config{{"m", o.m}, {"seed", o.seed}, {"restarts", fc.restarts}, {"tolerance", fc.tolerance},
              {"sup_samples", fc.sup_samples}, {"minimax_k", o.minimax_k}};
  out << render_report(manifest(o, "capacity", {o.domain_path}, config), result);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turan-type inequalities on convex domains"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--timestamp", o.timestamp, "Record the UTC time in the manifest");

  auto* analyze = app.add_subcommand("analyze", "Geometry summary of a domain");
  analyze->add_option("domain", o.domain_path, "Domain file (JSON)")->required();
  analyze->add_option("--grid", o.grid, "Grid size for smooth boundaries")->capture_default_str();

  auto* osc = app.add_subcommand("oscillation", "M_q(p) for a given zero set");
  osc->add_option("domain", o.domain_path, "Domain file (JSON)")->required();
  osc->add_option("zeros", o.zeros_path, "Zero set (JSON)")->required();
  osc->add_option("--q", o.q_text, "Exponent q >= 1 or 'inf'")->capture_default_str();
  osc->add_option("--tol", o.zero_tol, "Tolerance for zeros on the boundary")->capture_default_str();

  auto add_search_flags = [&](CLI::App* c) {
    c->add_option("--restarts", o.search.restarts, "Multi-start restarts")->capture_default_str();
    c->add_option("--max-iter", o.search.max_iterations, "Objective evaluations per restart")->capture_default_str();
    c->add_option("--seed", o.search.seed, "Master seed")->capture_default_str();
    c->add_option("--tol", o.search.tolerance, "Relative simplex tolerance on M_q")->capture_default_str();
    c->add_option("--csv", o.csv_path, "Write a CSV table to this path");
  };

  auto* search = app.add_subcommand("search", "Minimize M_q over zero sets in the domain");
  search->add_option("domain", o.domain_path, "Domain file (JSON)")->required();
  search->add_option("--n", o.n, "Degree")->required();
  search->add_option("--q", o.q_text, "Exponent q >= 1 or 'inf'")->capture_default_str();
  add_search_flags(search);

  auto* verify = app.add_subcommand("verify", "Check every certified inequality on searched polynomials");
  verify->add_option("domain", o.domain_path, "Domain file (JSON)")->required();
  verify->add_option("--n", o.n_text, "Degrees: 'a..b' or a comma list")->required();
  verify->add_option("--q", o.q_text, "Comma list of exponents, 'inf' allowed")->capture_default_str();
  add_search_flags(verify);

  auto* capacity = app.add_subcommand("capacity", "Transfinite diameter: closed form and Fekete estimate");
  capacity->add_option("set", o.domain_path, "Domain, segment or intervals file (JSON)")->required();
  capacity->add_option("--m", o.m, "Number of Fekete points")->capture_default_str();
  capacity->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  capacity->add_option("--restarts", o.fekete_restarts, "Fekete restarts")->capture_default_str();
  capacity->add_option("--minimax", o.minimax_k, "Also compute the minimax norm for this degree (1..6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*osc) return cmd_oscillation(o, out);
    if (*search) return cmd_search(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*capacity) return cmd_capacity(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitInvalidInput;
}

}  // namespace turan
