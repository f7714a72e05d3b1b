#include "turan/polynomial.hpp"

#include <cmath>
#include <numbers>

#include "turan/error.hpp"

namespace turan {

MonicPolynomial::MonicPolynomial(ZeroSet zeros) : zeros_(std::move(zeros)) {
  if (zeros_.empty()) throw InvalidInput("polynomial degree must be at least 1");
  for (const Point& z : zeros_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidInput("zero is not finite");
  }
}

Point MonicPolynomial::operator()(Point z) const noexcept {
  Point p{1.0, 0.0};
  for (const Point& w : zeros_) p *= (z - w);
  return p;
}

MonicPolynomial::Jet MonicPolynomial::jet(Point z) const noexcept {
  Point p{1.0, 0.0}, dp{0.0, 0.0};
  for (const Point& w : zeros_) {
    dp = dp * (z - w) + p;
    p *= (z - w);
  }
  return {p, dp};
}

Point MonicPolynomial::log_derivative(Point z) const {
  Point s{};
  for (const Point& w : zeros_) {
    const Point d = z - w;
    if (std::abs(d) < 1e-12) throw PreconditionError("log-derivative evaluated at a zero of p");
    s += 1.0 / d;
  }
  return s;
}

bool zeros_in_domain(const MonicPolynomial& p, const ConvexDomain& domain, double tol) {
  for (const Point& z : p.zeros()) {
    if (!domain.contains(z, tol)) return false;
  }
  return true;
}

int sector_count(const MonicPolynomial& p, Point apex, double sigma, double theta) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (theta < sigma) throw PreconditionError("sector requires sigma <= theta");
  const double span = theta - sigma;
  int count = 0;
  for (const Point& z : p.zeros()) {
    if (z == apex || span >= kTwoPi) {
      ++count;
      continue;
    }
    double offset = std::fmod(std::arg(z - apex) - sigma, kTwoPi);
    if (offset < 0) offset += kTwoPi;
    if (offset <= span) ++count;
  }
  return count;
}

}  // namespace turan
