#pragma once

#include <functional>
#include <vector>

#include "discode/disc.hpp"
#include "discode/estimate.hpp"
#include "discode/expr.hpp"
#include "discode/ode.hpp"

namespace discode {

/// Sup-grid configuration: interior rings 0, 0.05, ..., 0.4, then r_j = 1 - 10^(-j*step), j = 1..levels.
struct SupGrid {
  int levels = 40;
  double step = 0.25;
  int angles = kDefaultAngles;

  DiscGrid grid() const;
};

/// Weight of a ring; receives r and the exact gap 1 - r.
using RadialWeight = std::function<double(double r, double gap)>;

/// sup over the grid of g(z) * weight(|z|), ring by ring with golden refinement;
/// the trace holds the running sup after each ring.
NormEstimate sup_estimate(const std::string& kind, const std::function<double(Complex)>& g,
                          const RadialWeight& weight, const DiscGrid& grid);

/// log(e / (1 - r)) from the gap.
inline double log_weight(double gap) { return 1.0 - std::log(gap); }
/// 1 - r^2 from the gap.
inline double disc_gap(double gap) { return gap * (2.0 - gap); }

/// sup |A(z)| (1 - |z|^2)^2 (log(e/(1 - |z|)))^alpha.
NormEstimate growth_norm(const Expr& coefficient, double alpha, const SupGrid& g = {});

/// sup |f'(z)| (1 - |z|^2).
NormEstimate bloch_seminorm(const Expr& f, const SupGrid& g = {});
/// Bloch seminorm sampled along continued rays (sup over the rays' radii on the sup grid).
NormEstimate bloch_seminorm(const std::vector<RaySolution>& rays, const SupGrid& g = {});

/// sup |f(z)| |A(z)| (1 - |z|^2)^2.
NormEstimate bb_product(const Expr& f, const Expr& coefficient, const SupGrid& g = {});

/// sup f^#(z) (1 - |z|^2) with f^# = |f'| / (1 + |f|^2).
NormEstimate spherical_seminorm(const Expr& f, const SupGrid& g = {});

/// sup |f(z)| (log(e/(1 - |z|)))^(-alpha).
NormEstimate log_growth_ratio(const Expr& f, double alpha, const SupGrid& g = {});

/// (1/2pi) int |f(r e^{i theta})|^p d theta by the periodic trapezoid rule with doubling.
double hardy_mean(const Expr& f, double p, double r);
/// (1/2pi) int log+ |f(r e^{i theta})| d theta.
double proximity(const Expr& f, double r);

/// ||g_a||^2_{H^2} for g_a = f o phi_a - f(a), via
/// (2/pi) int_{|z| < 1-eps} |g_a'(z)|^2 log(1/|z|) dm(z), with the tail
/// monitored over radial depths 1 - 10^{-k}.
struct TranslateNorm {
  Complex a{};
  double value = 0.0;
  std::vector<double> tail;  // cumulative value at depths 1 - 10^{-k}, k = 1..10
  bool tail_monotone = true;
};
TranslateNorm translate_h2_norm(const Expr& f, Complex a, double rel_tol = 1e-8);

/// Default translate grid a = (1 - 10^{-j/2}) e^{2 pi i k / 16}, j = 0..8, k = 0..15.
std::vector<Complex> default_bmoa_grid();

/// sup over a_grid of ||g_a||^2_{H^2}; trace is the running sup grouped by |a|.
/// converged is false (inconclusive) when any translate's tail was not monotone.
NormEstimate bmoa_norm(const Expr& f, const std::vector<Complex>& a_grid, double rel_tol = 1e-8);

struct ProfilePoint {
  double radius = 0.0;
  double value = 0.0;
};
/// For each |a| in radii: sup over `angles` equally spaced arguments of ||g_a||^2.
std::vector<ProfilePoint> vmoa_profile(const Expr& f, const std::vector<double>& radii, int angles = 16,
                                       double rel_tol = 1e-8);

/// int_{|z| < depth} |f'(z)|^2 (log(e/(1-|z|)))^(-beta) dm(z) together with the
/// increments value(1 - 10^{-k}) - value(1 - 10^{-(k-1)}) for every k with 1 - 10^{-k} <= depth.
struct DirichletResult {
  double value = 0.0;
  std::vector<double> increments;
  std::vector<double> cumulative;
};
DirichletResult weighted_dirichlet(const Expr& f, double beta, double depth);

/// graded_gauss: fixed composite Gauss-Legendre rule, for integrands smooth away from the breaks.
/// adaptive: Gauss-Kronrod with capped bisection, for integrands with jumps.
enum class PolarRule { graded_gauss, adaptive };

/// Area integral int_{|z| < depth} h(z) dm(z) in polar coordinates. h receives z and the
/// exact gap 1 - |z|. Angular panels are graded geometrically toward each break, starting
/// at the ring's gap; radial panels are uniform in u = -log(1 - r). Returns the
/// cumulative value at each requested depth (increasing).
std::vector<double> polar_area_integral(const std::function<double(Complex, double)>& h,
                                        const std::vector<double>& depths,
                                        const std::vector<double>& angular_breaks, double rel_tol = 1e-10,
                                        PolarRule rule = PolarRule::graded_gauss);

}  // namespace discode
