#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/geometry.hpp"
#include "turan/norms.hpp"
#include "turan/polynomial.hpp"

namespace turan {

struct SearchConfig {
  int restarts = 32;
  int max_iterations = 2000;  // objective evaluations per restart
  std::uint64_t seed = 0;
  double tolerance = 1e-6;    // simplex spread of M_q, relative
  QuadratureConfig quadrature{};
};

struct RestartTrace {
  int index = 0;
  std::uint64_t seed = 0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct SearchResult {
  ZeroSet zeros;
  double value = 0.0;  // best M_q found
  int best_restart = 0;
  std::vector<RestartTrace> trace;
  double lower_bound = 0.0;  // best applicable certified lower bound
  std::string lower_bound_name;
  double margin = 0.0;       // value - lower_bound
  bool violation = false;    // value < lower_bound
};

/// Multi-start Nelder-Mead over the 2n real coordinates of the zeros; every
/// proposal is projected onto K. Restart r starts from a seeded random zero
/// set; restart 0 puts the zeros evenly on the boundary.
SearchResult minimize_oscillation(const ConvexDomain& domain, int n, double q, const SearchConfig& cfg = {});

struct SuiteEntry {
  int n = 0;
  double q = 2.0;
  SearchResult search;
  bool lower_bound_holds = true;
  std::optional<InequalityCheck> nikolskii;  // finite q only
  std::optional<HMassCheck> h_mass;
  std::optional<GabrielCheck> gabriel;      // inner set: the segment between diameter endpoints
  std::optional<PointwiseCheck> pointwise;
  std::optional<UpperConstruction> upper;
  bool passed = true;
  std::vector<std::string> failures;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  bool passed = true;
  int failures = 0;
};

/// Search M_q for each (n, q) and check every certified inequality on the best polynomial.
SuiteReport verify_bounds(const ConvexDomain& domain, const std::vector<int>& degrees,
                          const std::vector<double>& qs, const SearchConfig& cfg = {});

struct GradientConsistency {
  double max_deviation = 0.0;  // max over coordinates of |ratio - 1|
  std::vector<double> coarse;  // central differences, step 1e-5
  std::vector<double> fine;    // step 1e-6
  bool consistent = true;      // max_deviation <= 0.2
};

/// Compares central differences of M_q in every zero coordinate at two step sizes.
/// Throws PreconditionError unless every zero is more than 1e-3 inside K.
GradientConsistency gradient_consistency(const ConvexDomain& domain, const MonicPolynomial& p, double q,
                                         const QuadratureConfig& cfg = {});

}  // namespace turan
