#pragma once

#include <cstddef>
#include <vector>

#include "discode/disc.hpp"
#include "discode/expr.hpp"
#include "discode/taylor.hpp"

namespace discode {

/// f'' + A f = 0 with f(0) = f0, f'(0) = fp0.
struct ODEProblem {
  Expr coefficient;
  Complex f0{1.0};
  Complex fp0{0.0};
};

/// Local solution about `center` with f(center) = value, f'(center) = slope, from the
/// recurrence (k+1)(k+2) c_{k+2} = -sum_{j<=k} a_j c_{k-j}, a_j the Taylor
/// coefficients of A at center.
TaylorPatch taylor_solve_at(const Expr& coefficient, Complex center, Complex value, Complex slope,
                            std::size_t degree);

TaylorPatch taylor_solve(const ODEProblem& p, std::size_t degree);

struct RayOptions {
  double step_factor = 0.25;
  std::size_t degree = 24;
  double tail_tolerance = 1e-12;
  int max_halvings = 8;
};

/// Solution continued along z = t e^{i theta}, 0 <= t <= r_max, by re-centred patches.
class RaySolution {
 public:
  RaySolution(double theta, double r_max, std::vector<TaylorPatch> patches, std::vector<double> starts);

  double theta() const { return theta_; }
  double r_max() const { return r_max_; }
  const std::vector<TaylorPatch>& patches() const { return patches_; }
  /// Radial positions of the patch centers (increasing, first is 0).
  const std::vector<double>& centers() const { return starts_; }

  /// The preferred patch for radius t: the last patch whose center is <= t.
  const TaylorPatch& patch_for(double t) const;
  Complex point(double t) const { return std::polar(t, theta_); }
  Complex value(double t) const;
  Complex derivative(double t) const;
  Complex second_derivative(double t) const;

 private:
  double theta_;
  double r_max_;
  std::vector<TaylorPatch> patches_;
  std::vector<double> starts_;
};

/// Throws DomainError when the ray passes through a declared singularity of A,
/// ConvergenceError when the tail estimate cannot be met by step halving.
RaySolution continue_along_ray(const ODEProblem& p, double theta, double r_max, RayOptions opts = {});

/// max over the grid of |f'' + A f| / (1 + |f|).
double residual(const Expr& f, const Expr& coefficient, const DiscGrid& grid);

/// Second solution g = f * int_0^z f^{-2} from a zero-free solution f, integrated along [0, z].
class ReductionOfOrder {
 public:
  explicit ReductionOfOrder(Expr f, double tolerance = 1e-12);

  Complex integral(Complex z) const;
  Complex value(Complex z) const;
  Complex derivative(Complex z) const;

 private:
  Expr f_;
  Expr df_;
  double tol_;
};

ReductionOfOrder reduction_of_order(const Expr& f);

/// (M(r0, f) + M(r0, f')(1 - r0)) exp(int_{r0}^{r} |A(t e^{i theta})| (1 - t) dt).
double gronwall_bound(const ODEProblem& p, double theta, double r0, double r);

/// Both factors of the Gronwall bound, for reuse across many r.
struct GronwallFactors {
  double prefactor = 0.0;
  double exponent = 0.0;
};
GronwallFactors gronwall_factors(const ODEProblem& p, double theta, double r0, double r);

/// Wronskian f1 f2' - f1' f2 at z.
Complex wronskian(const Expr& f1, const Expr& f2, Complex z);

/// Max modulus of the solution and of its derivative on |z| = r.
struct SolutionCircleMax {
  double value = 0.0;
  double derivative = 0.0;
};
SolutionCircleMax solution_circle_max(const ODEProblem& p, double r);

}  // namespace discode
