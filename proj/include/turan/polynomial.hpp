#pragma once

#include <span>
#include <vector>

#include "turan/geometry.hpp"

namespace turan {

/// Zeros of a monic polynomial, repeated by multiplicity.
using ZeroSet = std::vector<Point>;

/// p(z) = prod_j (z - z_j). Everything is evaluated from the zero product;
/// there is no coefficient representation.
class MonicPolynomial {
 public:
  /// Throws InvalidInput for an empty or non-finite zero set.
  explicit MonicPolynomial(ZeroSet zeros);

  int degree() const noexcept { return static_cast<int>(zeros_.size()); }
  std::span<const Point> zeros() const noexcept { return zeros_; }

  Point operator()(Point z) const noexcept;

  struct Jet {
    Point value;
    Point derivative;
  };
  /// p(z) and p'(z) in one pass; p' = sum_i prod_{j != i} (z - z_j).
  Jet jet(Point z) const noexcept;
  Point derivative(Point z) const noexcept { return jet(z).derivative; }

  /// p'/p(z) = sum_j 1/(z - z_j). Throws PreconditionError within 1e-12 of a zero.
  Point log_derivative(Point z) const;

 private:
  ZeroSet zeros_;
};

/// True when every zero lies in K or within `tol` of it.
bool zeros_in_domain(const MonicPolynomial& p, const ConvexDomain& domain, double tol);

/// Number of zeros with arg(z_j - apex) in [sigma, theta] (mod 2 pi).
/// Zeros equal to the apex are counted in every sector.
int sector_count(const MonicPolynomial& p, Point apex, double sigma, double theta);

}  // namespace turan
