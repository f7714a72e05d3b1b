#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "turan/geometry.hpp"

namespace turan {

/// Disjoint closed real intervals [lo, hi], lo < hi.
struct RealIntervals {
  std::vector<std::pair<double, double>> intervals;
};

/// Compact sets whose capacity we estimate. Domains are represented by
/// their boundary (maximum principle).
using CompactSet = std::variant<Segment, ConvexDomain, RealIntervals>;

/// Throws InvalidInput for a degenerate segment or overlapping/empty intervals.
void validate(const CompactSet& set);

/// Chebyshev's lower bound 2 (|J|/4)^k for monic degree-k polynomials on a segment J.
double segment_chebyshev_lower(double segment_length, int k);

/// Transfinite diameter of the regular k-gon with side `side`:
/// Gamma(1/k) / (sqrt(pi) 2^(1+2/k) Gamma(1/2+1/k)) * side.
double regular_polygon_capacity(int k, double side);

/// Closed form where known: segment l/4, single interval l/4, disk R,
/// ellipse (a+b)/2, regular polygons. Absent otherwise.
std::optional<double> transfinite_diameter_exact(const CompactSet& set);

struct FeketeConfig {
  int restarts = 16;
  double tolerance = 1e-10;  // relative improvement of delta_m per sweep
  int max_sweeps = 4000;
  int sup_samples = 8192;
};

struct FeketeEstimate {
  int m = 0;
  /// delta_m: geometric mean of the pairwise distances of the best m-point
  /// configuration. Nonincreasing in m, bounded below by the capacity.
  double delta = 0.0;
  /// |F|^(1/m) for F(z) = prod (z - z_j) over the Fekete points, sup taken on
  /// the set. Also an upper bound for the capacity, usually much tighter.
  double chebyshev_estimate = 0.0;
  std::vector<Point> points;
  int best_restart = 0;
  int sweeps = 0;
  bool converged = true;
};

/// Approximate Fekete points by seeded multi-start coordinate-wise
/// golden-section sweeps along the set's arc-length coordinate.
FeketeEstimate transfinite_diameter_fekete(const CompactSet& set, int m, std::uint64_t seed,
                                           const FeketeConfig& cfg = {});

struct MinimaxConfig {
  int restarts = 12;
  int samples = 4096;
  int max_evaluations = 20000;  // per restart
};

struct MinimaxResult {
  double value = 0.0;  // min over w of max over the set of |prod (z - w_j)|
  std::vector<Point> zeros;
  bool converged = true;
};

/// Numerical minimax (Chebyshev) norm of monic degree-k polynomials on the set, 1 <= k <= 6.
MinimaxResult chebyshev_min_norm_numeric(const CompactSet& set, int k, std::uint64_t seed = 1,
                                         const MinimaxConfig& cfg = {});

struct PolyaReport {
  double total_length = 0.0;  // |J|
  double delta = 0.0;         // Fekete delta_m, an upper proxy for the capacity
  bool holds = true;          // |J| <= 4 delta
  double margin = 0.0;        // (4 delta - |J|) / |J|
  bool low_margin = false;    // margin < 5%: rerun with larger m
};

PolyaReport polya_check(const RealIntervals& set, int m, std::uint64_t seed, const FeketeConfig& cfg = {});

}  // namespace turan
