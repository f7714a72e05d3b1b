#include "turan/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "../geometry/internal.hpp"
#include "../optimizer/nelder_mead.hpp"
#include "turan/error.hpp"
#include "turan/random.hpp"

namespace turan {

namespace {

using detail::kPi;

/// The set as a curve (or union of curves) with a single length coordinate s in [0, T].
class Track {
 public:
  explicit Track(const CompactSet& set) : set_(&set) {
    if (const auto* seg = std::get_if<Segment>(&set)) {
      total_ = std::abs(seg->b - seg->a);
    } else if (const auto* dom = std::get_if<ConvexDomain>(&set)) {
      total_ = dom->boundary().length();
      periodic_ = true;
      for (double c : dom->boundary().corners()) breaks_.push_back(c);
    } else {
      const auto& iv = std::get<RealIntervals>(set).intervals;
      double acc = 0.0;
      for (const auto& [lo, hi] : iv) {
        starts_.push_back(acc);
        acc += hi - lo;
        breaks_.push_back(acc);
      }
      if (!breaks_.empty()) breaks_.pop_back();
      total_ = acc;
    }
  }

  double total() const { return total_; }
  bool periodic() const { return periodic_; }
  /// Corners or joins between intervals, in increasing order.
  const std::vector<double>& breaks() const { return breaks_; }

  Point operator()(double s) const {
    if (const auto* seg = std::get_if<Segment>(set_)) {
      return seg->a + (seg->b - seg->a) * (std::clamp(s, 0.0, total_) / total_);
    }
    if (const auto* dom = std::get_if<ConvexDomain>(set_)) return dom->boundary().point(s);
    const auto& iv = std::get<RealIntervals>(*set_).intervals;
    s = std::clamp(s, 0.0, total_);
    std::size_t k = std::upper_bound(starts_.begin(), starts_.end(), s) - starts_.begin();
    k = k == 0 ? 0 : k - 1;
    return {std::min(iv[k].first + (s - starts_[k]), iv[k].second), 0.0};
  }

  /// s evenly spread: arc-length equispaced on closed curves, Chebyshev-like
  /// (cosine) spacing on each interval otherwise.
  std::vector<double> spread(int m) const {
    std::vector<double> s(m);
    if (periodic_) {
      for (int i = 0; i < m; ++i) s[i] = total_ * i / m;
      return s;
    }
    for (int i = 0; i < m; ++i) {
      const double x = m == 1 ? 0.5 : 0.5 * (1.0 - std::cos(kPi * i / (m - 1)));
      s[i] = x * total_;
    }
    return s;
  }

 private:
  const CompactSet* set_;
  double total_ = 0.0;
  bool periodic_ = false;
  std::vector<double> starts_;
  std::vector<double> breaks_;
};

double log_abs_product(Point z, const std::vector<Point>& zs, std::size_t skip) {
  double acc = 0.0;
  for (std::size_t j = 0; j < zs.size(); ++j) {
    if (j != skip) acc += std::log(std::norm(z - zs[j]));
  }
  return 0.5 * acc;
}

double energy(const std::vector<Point>& zs) {
  double e = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) e += std::log(std::abs(zs[i] - zs[j]));
  }
  return e;
}

double delta_from_energy(double e, int m) { return std::exp(2.0 * e / (static_cast<double>(m) * (m - 1))); }

/// max over the set of g, by uniform sampling of the track plus refinement of the top peaks.
template <class G>
double track_sup(const Track& track, G&& g, int samples) {
  std::vector<double> s;
  s.reserve(samples + track.breaks().size() + 1);
  const int last = track.periodic() ? samples : samples + 1;
  for (int i = 0; i < last; ++i) s.push_back(track.total() * i / samples);
  for (double b : track.breaks()) s.push_back(b);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const std::size_t n = s.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = g(track(s[i]));

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = i > 0 ? v[i] >= v[i - 1] : (!track.periodic() || v[i] >= v[n - 1]);
    const bool right = i + 1 < n ? v[i] >= v[i + 1] : (!track.periodic() || v[i] >= v[0]);
    if (left && right) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (peaks.size() > 3) peaks.resize(3);
  double best = *std::max_element(v.begin(), v.end());
  for (std::size_t i : peaks) {
    const double lo = i > 0 ? s[i - 1] : (track.periodic() ? s[n - 1] - track.total() : s[0]);
    const double hi = i + 1 < n ? s[i + 1] : (track.periodic() ? s[0] + track.total() : s[n - 1]);
    const auto [x, fx] = detail::golden_max(
        [&](double t) { return g(track(track.periodic() ? detail::wrap_period(t, track.total()) : t)); }, lo, hi,
        1e-13 * track.total());
    (void)x;
    best = std::max(best, fx);
  }
  return best;
}

struct Configuration {
  std::vector<double> s;
  std::vector<Point> z;
  double energy = -std::numeric_limits<double>::infinity();
  int sweeps = 0;
  bool converged = false;
};

/// Coordinate-wise golden-section ascent of the log-energy, each point moving
/// between its two neighbours.
Configuration fekete_ascent(const Track& track, std::vector<double> s, const FeketeConfig& cfg) {
  const int m = static_cast<int>(s.size());
  const double T = track.total();
  std::sort(s.begin(), s.end());
  Configuration c;
  c.s = s;
  c.z.resize(m);
  for (int i = 0; i < m; ++i) c.z[i] = track(s[i]);
  c.energy = energy(c.z);

  auto wrap = [&](double t) { return track.periodic() ? detail::wrap_period(t, T) : t; };
  double delta = delta_from_energy(c.energy, m);
  for (c.sweeps = 0; c.sweeps < cfg.max_sweeps;) {
    ++c.sweeps;
    for (int i = 0; i < m; ++i) {
      double lo, hi;
      if (track.periodic()) {
        lo = c.s[(i + m - 1) % m];
        hi = c.s[(i + 1) % m];
        if (i == 0) lo -= T;
        if (i == m - 1) hi += T;
      } else {
        lo = i == 0 ? 0.0 : c.s[i - 1];
        hi = i == m - 1 ? T : c.s[i + 1];
      }
      auto gain = [&](double t) { return log_abs_product(track(wrap(t)), c.z, static_cast<std::size_t>(i)); };
      const double current = gain(c.s[i]);
      double best_t = c.s[i], best_v = current;
      auto consider = [&](double t) {
        const double v = gain(t);
        if (v > best_v) {
          best_v = v;
          best_t = t;
        }
      };
      if (!track.periodic()) {
        if (i == 0) consider(0.0);
        if (i == m - 1) consider(T);
      }
      // Joins between intervals split the bracket into pieces on which the
      // energy is unimodal.
      std::vector<double> cuts{lo};
      for (double b : track.breaks()) {
        if (!track.periodic() && b > lo && b < hi) cuts.push_back(b);
      }
      cuts.push_back(hi);
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double a = cuts[k], b = cuts[k + 1];
        if (!(b > a)) continue;
        const auto [x, fx] = detail::golden_max(gain, a, b, 1e-10 * (b - a) + 1e-15 * T);
        if (fx > best_v) {
          best_v = fx;
          best_t = x;
        }
        if (k > 0) consider(a);
      }
      if (best_v > current) {
        c.s[i] = best_t;
        c.z[i] = track(wrap(best_t));
        c.energy += best_v - current;
      }
    }
    if (track.periodic()) {
      for (double& t : c.s) t = detail::wrap_period(t, T);
      // Keep the cyclic order starting at the smallest coordinate.
      std::vector<std::size_t> idx(m);
      for (int i = 0; i < m; ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return c.s[a] < c.s[b]; });
      std::vector<double> s2(m);
      std::vector<Point> z2(m);
      for (int i = 0; i < m; ++i) {
        s2[i] = c.s[idx[i]];
        z2[i] = c.z[idx[i]];
      }
      c.s = std::move(s2);
      c.z = std::move(z2);
    }
    const double next = delta_from_energy(c.energy, m);
    const double improvement = (next - delta) / delta;
    delta = next;
    if (improvement < cfg.tolerance) {
      c.converged = true;
      break;
    }
  }
  c.energy = energy(c.z);
  return c;
}

Point set_centroid(const CompactSet& set) {
  if (const auto* seg = std::get_if<Segment>(&set)) return 0.5 * (seg->a + seg->b);
  if (const auto* dom = std::get_if<ConvexDomain>(&set)) return dom->interior_point();
  const auto& iv = std::get<RealIntervals>(set).intervals;
  return {0.5 * (iv.front().first + iv.back().second), 0.0};
}

bool is_regular(const Polygon& poly, double& side) {
  const std::size_t n = poly.vertices.size();
  side = std::abs(poly.vertices[1] - poly.vertices[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly.vertices[i], b = poly.vertices[(i + 1) % n], c = poly.vertices[(i + 2) % n];
    if (std::abs(std::abs(b - a) - side) > 1e-9 * side) return false;
    const double turn = std::arg((c - b) / (b - a));
    if (std::abs(turn - 2.0 * kPi / n) > 1e-9) return false;
  }
  return true;
}

}  // namespace

void validate(const CompactSet& set) {
  if (const auto* seg = std::get_if<Segment>(&set)) {
    if (!std::isfinite(seg->a.real()) || !std::isfinite(seg->a.imag()) || !std::isfinite(seg->b.real()) ||
        !std::isfinite(seg->b.imag()))
      throw InvalidInput("segment endpoints must be finite");
    if (seg->a == seg->b) throw InvalidInput("segment endpoints must be distinct");
  } else if (const auto* iv = std::get_if<RealIntervals>(&set)) {
    if (iv->intervals.empty()) throw InvalidInput("interval list is empty");
    for (std::size_t k = 0; k < iv->intervals.size(); ++k) {
      const auto [lo, hi] = iv->intervals[k];
      if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidInput("interval endpoints must be finite");
      if (!(lo < hi)) throw InvalidInput("interval must have lo < hi");
      if (k > 0 && !(iv->intervals[k - 1].second < lo))
        throw InvalidInput("intervals must be disjoint and sorted");
    }
  }
}

double segment_chebyshev_lower(double segment_length, int k) {
  if (!(segment_length > 0.0)) throw InvalidInput("segment length must be positive");
  if (k < 1) throw InvalidInput("degree must be at least 1");
  return 2.0 * std::pow(segment_length / 4.0, k);
}

double regular_polygon_capacity(int k, double side) {
  if (k < 3) throw InvalidInput("regular polygon needs k >= 3");
  if (!(side > 0.0)) throw InvalidInput("side must be positive");
  const double kk = k;
  return std::tgamma(1.0 / kk) / (std::sqrt(kPi) * std::pow(2.0, 1.0 + 2.0 / kk) * std::tgamma(0.5 + 1.0 / kk)) *
         side;
}

std::optional<double> transfinite_diameter_exact(const CompactSet& set) {
  validate(set);
  if (const auto* seg = std::get_if<Segment>(&set)) return std::abs(seg->b - seg->a) / 4.0;
  if (const auto* iv = std::get_if<RealIntervals>(&set)) {
    if (iv->intervals.size() == 1) return (iv->intervals[0].second - iv->intervals[0].first) / 4.0;
    return std::nullopt;
  }
  const auto& dom = std::get<ConvexDomain>(set);
  if (const auto* d = dom.as_disk()) return d->radius;
  if (const auto* e = dom.as_ellipse()) return 0.5 * (e->a + e->b);
  double side = 0.0;
  if (is_regular(*dom.as_polygon(), side)) {
    return regular_polygon_capacity(static_cast<int>(dom.as_polygon()->vertices.size()), side);
  }
  return std::nullopt;
}

FeketeEstimate transfinite_diameter_fekete(const CompactSet& set, int m, std::uint64_t seed, const FeketeConfig& cfg) {
  validate(set);
  if (m < 2) throw InvalidInput("Fekete search needs m >= 2");
  const Track track(set);
  const auto base = track.spread(m);

  FeketeEstimate out;
  out.m = m;
  Configuration best;
  const int restarts = std::max(1, cfg.restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> s = base;
    if (r > 0) {
      std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
      std::uniform_real_distribution<double> jitter(-0.45, 0.45);
      const double T = track.total();
      for (int i = 0; i < m; ++i) {
        const double left = i > 0 ? s[i] - base[i - 1] : (track.periodic() ? T / m : 0.0);
        const double right = i + 1 < m ? base[i + 1] - s[i] : (track.periodic() ? T / m : 0.0);
        const double step = jitter(rng);
        s[i] += step * (step < 0 ? left : right);
      }
    }
    auto c = fekete_ascent(track, std::move(s), cfg);
    out.sweeps += c.sweeps;
    if (c.energy > best.energy) {
      best = std::move(c);
      out.best_restart = r;
    }
  }
  out.converged = best.converged;
  out.delta = delta_from_energy(best.energy, m);
  out.points = best.z;
  const double log_sup =
      track_sup(track, [&](Point z) { return log_abs_product(z, out.points, out.points.size()); }, cfg.sup_samples);
  out.chebyshev_estimate = std::exp(log_sup / m);
  return out;
}

MinimaxResult chebyshev_min_norm_numeric(const CompactSet& set, int k, std::uint64_t seed, const MinimaxConfig& cfg) {
  validate(set);
  if (k < 1 || k > 6) throw InvalidInput("minimax degree must be in 1..6");
  const Track track(set);
  std::vector<Point> samples;
  {
    const int n = std::max(16, cfg.samples);
    const int last = track.periodic() ? n : n + 1;
    for (int i = 0; i < last; ++i) samples.push_back(track(track.total() * i / n));
    for (double b : track.breaks()) samples.push_back(track(b));
  }
  auto to_points = [&](const std::vector<double>& x) {
    std::vector<Point> w(k);
    for (int j = 0; j < k; ++j) w[j] = {x[2 * j], x[2 * j + 1]};
    return w;
  };
  auto sampled_max = [&](const std::vector<double>& x) {
    double best = 0.0;
    for (const Point& z : samples) {
      double prod = 1.0;
      for (int j = 0; j < k; ++j) prod *= std::norm(z - Point{x[2 * j], x[2 * j + 1]});
      best = std::max(best, prod);
    }
    return std::sqrt(best);
  };

  const Point centre = set_centroid(set);
  double scale = 0.0;
  for (const Point& z : samples) scale = std::max(scale, std::abs(z - centre));
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  MinimaxResult out;
  out.value = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
  const int restarts = std::max(1, cfg.restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> x(2 * k);
    if (r == 0) {
      // Evenly spread points of the set.
      const auto s = track.spread(k + 2);
      for (int j = 0; j < k; ++j) {
        const Point z = track(s[j + 1]);
        x[2 * j] = z.real();
        x[2 * j + 1] = z.imag();
      }
    } else if (r == 1) {
      for (int j = 0; j < k; ++j) {
        x[2 * j] = centre.real();
        x[2 * j + 1] = centre.imag();
      }
    } else {
      rng.seed(derive_seed(seed, static_cast<std::uint64_t>(r)));
      for (int j = 0; j < 2 * k; ++j) x[j] = (j % 2 == 0 ? centre.real() : centre.imag()) + scale * unit(rng);
    }
    // Nelder-Mead stalls on the nonsmooth max; restart it from its own
    // result with a shrinking simplex until it stops improving.
    detail::NelderMeadOptions opt;
    opt.initial_step = 0.25 * scale;
    opt.tolerance = 1e-12;
    int budget = cfg.max_evaluations;
    double value = sampled_max(x);
    bool converged = false;
    while (budget > 0) {
      opt.max_evaluations = std::min(budget, 200 * (2 * k + 1));
      const auto res = detail::nelder_mead(sampled_max, x, opt);
      budget -= res.evaluations;
      const bool improved = res.value < value * (1.0 - 1e-12);
      if (res.value <= value) {
        x = res.x;
        value = res.value;
      }
      if (!improved && opt.initial_step < 1e-9 * scale) {
        converged = true;
        break;
      }
      opt.initial_step = improved ? std::max(opt.initial_step * 0.5, 1e-6 * scale) : opt.initial_step * 0.1;
    }
    if (value < out.value) {
      out.value = value;
      out.converged = converged;
      best_x = x;
    }
  }
  out.zeros = to_points(best_x);
  const double log_sup =
      track_sup(track, [&](Point z) { return log_abs_product(z, out.zeros, out.zeros.size()); }, cfg.samples);
  out.value = std::exp(log_sup);
  return out;
}

PolyaReport polya_check(const RealIntervals& set, int m, std::uint64_t seed, const FeketeConfig& cfg) {
  const CompactSet cs = set;
  validate(cs);
  PolyaReport r;
  for (const auto& [lo, hi] : set.intervals) r.total_length += hi - lo;
  r.delta = transfinite_diameter_fekete(cs, m, seed, cfg).delta;
  r.holds = r.total_length <= 4.0 * r.delta;
  r.margin = (4.0 * r.delta - r.total_length) / r.total_length;
  r.low_margin = r.margin < 0.05;
  return r;
}

}  // namespace turan
