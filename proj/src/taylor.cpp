#include "discode/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "discode/errors.hpp"

namespace discode {

namespace {

void require_inside(const TaylorPatch& p, Complex z) {
  if (!p.contains(z)) {
    std::ostringstream os;
    os << "point " << z << " outside trust radius " << p.trust_radius << " of patch at " << p.center;
    throw DomainError(os.str());
  }
}

}  // namespace

Complex TaylorPatch::value(Complex z) const {
  require_inside(*this, z);
  const Complex h = z - center;
  Complex acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * h + *it;
  return acc;
}

Complex TaylorPatch::derivative(Complex z) const {
  require_inside(*this, z);
  const Complex h = z - center;
  Complex acc = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 1;) acc = acc * h + static_cast<double>(k) * coefficients[k];
  return acc;
}

Complex TaylorPatch::second_derivative(Complex z) const {
  require_inside(*this, z);
  const Complex h = z - center;
  Complex acc = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 2;) {
    acc = acc * h + static_cast<double>(k * (k - 1)) * coefficients[k];
  }
  return acc;
}

double trust_radius_for(const Expr& f, Complex center) {
  const double r = f.analytic_radius(center);
  return std::isfinite(r) ? kTrustSafety * r : kEntireTrustCap;
}

TaylorPatch taylor_at(const Expr& f, Complex center, std::size_t degree) {
  if (!(std::abs(center) < 1.0)) throw DomainError("taylor_at requires a center inside the unit disc");
  const double trust = trust_radius_for(f, center);
  if (!(trust > 0.0)) throw DomainError("taylor_at center coincides with a declared singularity");
  Series s = f.series_at(center, degree);
  return TaylorPatch{center, std::move(s.coefficients()), trust};
}

}  // namespace discode
