#include "discode/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "discode/errors.hpp"
#include "discode/quadrature.hpp"

namespace discode {

TaylorPatch taylor_solve_at(const Expr& coefficient, Complex center, Complex value, Complex slope,
                            std::size_t degree) {
  if (degree < 2) throw DomainError("taylor_solve requires degree >= 2");
  if (!(std::abs(center) < 1.0)) throw DomainError("taylor_solve requires a center inside the unit disc");
  const Series a = coefficient.series_at(center, degree - 2);
  std::vector<Complex> c(degree + 1, Complex{});
  c[0] = value;
  c[1] = slope;
  for (std::size_t k = 0; k + 2 <= degree; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * c[k - j];
    c[k + 2] = -acc / static_cast<double>((k + 1) * (k + 2));
  }
  const double trust = trust_radius_for(coefficient, center);
  if (!(trust > 0.0)) throw DomainError("taylor_solve center coincides with a singularity of A");
  return TaylorPatch{center, std::move(c), trust};
}

TaylorPatch taylor_solve(const ODEProblem& p, std::size_t degree) {
  return taylor_solve_at(p.coefficient, 0.0, p.f0, p.fp0, degree);
}

RaySolution::RaySolution(double theta, double r_max, std::vector<TaylorPatch> patches, std::vector<double> starts)
    : theta_(theta), r_max_(r_max), patches_(std::move(patches)), starts_(std::move(starts)) {}

const TaylorPatch& RaySolution::patch_for(double t) const {
  if (!(t >= 0.0 && t <= r_max_)) throw DomainError("ray evaluation outside [0, r_max]");
  auto it = std::upper_bound(starts_.begin(), starts_.end(), t);
  const auto idx = static_cast<std::size_t>(std::distance(starts_.begin(), it)) - 1;
  return patches_[idx];
}

Complex RaySolution::value(double t) const { return patch_for(t).value(point(t)); }
Complex RaySolution::derivative(double t) const { return patch_for(t).derivative(point(t)); }
Complex RaySolution::second_derivative(double t) const { return patch_for(t).second_derivative(point(t)); }

namespace {

void reject_singular_ray(const Expr& a, double theta) {
  if (!a.singularities()) return;
  const Complex dir = std::polar(1.0, theta);
  for (const Complex& s : *a.singularities()) {
    // Distance from s to the ray {t e^{i theta}: t >= 0}.
    const double along = (std::conj(dir) * s).real();
    const double dist = along <= 0.0 ? std::abs(s) : std::abs((std::conj(dir) * s).imag());
    if (dist < 1e-9) {
      std::ostringstream os;
      os << "ray theta = " << theta << " passes through the declared singularity " << s;
      throw DomainError(os.str());
    }
  }
}

// max_k |c_k| h^k over the last four coefficients, relative to the largest term.
double tail_ratio(const TaylorPatch& p, double h) {
  const auto& c = p.coefficients;
  double scale = 0.0, tail = 0.0, hk = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double term = std::abs(c[k]) * hk;
    scale = std::max(scale, term);
    if (k + 4 >= c.size()) tail = std::max(tail, term);
    hk *= h;
  }
  return scale == 0.0 ? 0.0 : tail / scale;
}

}  // namespace

RaySolution continue_along_ray(const ODEProblem& p, double theta, double r_max, RayOptions opts) {
  if (!(r_max > 0.0 && r_max < 1.0)) throw DomainError("continue_along_ray requires 0 < r_max < 1");
  reject_singular_ray(p.coefficient, theta);
  const Complex dir = std::polar(1.0, theta);
  std::vector<TaylorPatch> patches;
  std::vector<double> starts;
  double t = 0.0;
  Complex value = p.f0, slope = p.fp0;
  while (true) {
    TaylorPatch patch = taylor_solve_at(p.coefficient, t * dir, value, slope, opts.degree);
    double h = std::min(opts.step_factor * (1.0 - t), r_max - t);
    h = std::min(h, patch.trust_radius);
    int halvings = 0;
    while (tail_ratio(patch, h) > opts.tail_tolerance) {
      if (++halvings > opts.max_halvings) {
        std::ostringstream os;
        os << "local truncation estimate exceeds tolerance at t = " << t;
        throw ConvergenceError(os.str());
      }
      h *= 0.5;
    }
    const bool last = t + h >= r_max;
    const double t_next = last ? r_max : t + h;
    const Complex z_next = t_next * dir;
    value = patch.value(z_next);
    slope = patch.derivative(z_next);
    patches.push_back(std::move(patch));
    starts.push_back(t);
    if (last) break;
    t = t_next;
  }
  return RaySolution(theta, r_max, std::move(patches), std::move(starts));
}

double residual(const Expr& f, const Expr& coefficient, const DiscGrid& grid) {
  const Expr d2 = diff(diff(f));
  double worst = 0.0;
  grid.for_each_point([&](Complex z, std::size_t) {
    const Complex fz = f(z);
    const double r = std::abs(d2(z) + coefficient(z) * fz) / (1.0 + std::abs(fz));
    worst = std::max(worst, r);
  });
  return worst;
}

ReductionOfOrder::ReductionOfOrder(Expr f, double tolerance) : f_(std::move(f)), df_(diff(f_)), tol_(tolerance) {}

Complex ReductionOfOrder::integral(Complex z) const {
  if (z == Complex{}) return 0.0;
  auto integrand = [&](double s) {
    const Complex fz = f_(s * z);
    if (std::abs(fz) < 1e-300) throw EvaluationError("reduction_of_order: zero of f on the integration path");
    return z / (fz * fz);
  };
  ComplexQuadratureResult q = adaptive_simpson_complex(integrand, 0.0, 1.0, {1e-300, tol_, 50});
  if (!q.converged) throw ConvergenceError("reduction_of_order: quadrature did not converge");
  return q.value;
}

Complex ReductionOfOrder::value(Complex z) const { return f_(z) * integral(z); }

Complex ReductionOfOrder::derivative(Complex z) const { return df_(z) * integral(z) + 1.0 / f_(z); }

ReductionOfOrder reduction_of_order(const Expr& f) { return ReductionOfOrder(f); }

SolutionCircleMax solution_circle_max(const ODEProblem& p, double r) {
  if (r == 0.0) return {std::abs(p.f0), std::abs(p.fp0)};
  // A single high-degree patch about 0 when the circle sits well inside its disc of analyticity;
  // otherwise one continued ray per scan angle.
  const double radius = p.coefficient.analytic_radius(0.0);
  if (r <= 0.6 * radius) {
    const TaylorPatch base = [&] {
      TaylorPatch t = taylor_solve(p, 96);
      t.trust_radius = std::max(t.trust_radius, r);
      return t;
    }();
    const CircleMax mv = circle_max([&](Complex z) { return std::abs(base.value(z)); }, r);
    const CircleMax md = circle_max([&](Complex z) { return std::abs(base.derivative(z)); }, r);
    return {mv.value, md.value};
  }
  auto along = [&](Complex z, bool deriv) {
    const RaySolution ray = continue_along_ray(p, std::arg(z), r);
    return std::abs(deriv ? ray.derivative(r) : ray.value(r));
  };
  const CircleMax mv = circle_max([&](Complex z) { return along(z, false); }, r);
  const CircleMax md = circle_max([&](Complex z) { return along(z, true); }, r);
  return {mv.value, md.value};
}

GronwallFactors gronwall_factors(const ODEProblem& p, double theta, double r0, double r) {
  if (!(r0 >= 0.0 && r0 < r && r < 1.0)) throw DomainError("gronwall_bound requires 0 <= r0 < r < 1");
  const SolutionCircleMax m = solution_circle_max(p, r0);
  const Complex dir = std::polar(1.0, theta);
  QuadratureResult q = integrate_toward_boundary(
      [&](double t, double gap) { return std::abs(p.coefficient(t * dir)) * gap; }, r0, r);
  if (!q.converged) throw ConvergenceError("gronwall_bound: quadrature did not converge");
  return {m.value + m.derivative * (1.0 - r0), q.value};
}

double gronwall_bound(const ODEProblem& p, double theta, double r0, double r) {
  const GronwallFactors g = gronwall_factors(p, theta, r0, r);
  return g.prefactor * std::exp(g.exponent);
}

Complex wronskian(const Expr& f1, const Expr& f2, Complex z) {
  return f1(z) * diff(f2)(z) - diff(f1)(z) * f2(z);
}

}  // namespace discode
