#pragma once

#include <cstddef>
#include <vector>

#include "discode/expr.hpp"

namespace discode {

/// Local power-series representation sum_k c_k (z - center)^k.
struct TaylorPatch {
  Complex center{};
  std::vector<Complex> coefficients;
  double trust_radius = 0.0;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  bool contains(Complex z) const { return std::abs(z - center) <= trust_radius; }

  /// Value at z; DomainError outside the trust disc.
  Complex value(Complex z) const;
  Complex derivative(Complex z) const;
  Complex second_derivative(Complex z) const;
};

/// Fraction of the distance to the nearest declared singularity a patch may be trusted on.
inline constexpr double kTrustSafety = 0.75;
/// Trust radius cap for entire expressions.
inline constexpr double kEntireTrustCap = 1.5;

/// Trust radius for an expansion of f about center.
double trust_radius_for(const Expr& f, Complex center);

/// Taylor expansion of f about center by recursive series arithmetic.
TaylorPatch taylor_at(const Expr& f, Complex center, std::size_t degree);

}  // namespace discode
