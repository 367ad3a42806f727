#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "discode/expr.hpp"

namespace discode {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
  bool converged = true;
};

struct QuadratureTolerance {
  double abs = 1e-10;
  double rel = 1e-10;
  int max_depth = 40;
};

/// Adaptive Simpson on [a, b] with the Lyness acceptance test
/// |S2 - S1| <= 15 * tol. The absolute target is max(abs, rel * |I0|) with I0
/// an 8-panel Simpson pre-estimate. Sets converged = false when max_depth is hit.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  QuadratureTolerance tol = {});

/// Same integral over a complex-valued integrand (real and imaginary parts share the mesh).
struct ComplexQuadratureResult {
  Complex value{};
  double error = 0.0;
  bool converged = true;
};
ComplexQuadratureResult adaptive_simpson_complex(const std::function<Complex(double)>& f, double a, double b,
                                                 QuadratureTolerance tol = {});

/// u = -log(1 - t): maps t in [0, 1) to u in [0, inf).
inline double to_log_gap(double t) { return -std::log1p(-t); }
/// Inverse map t = 1 - exp(-u), together with 1 - t = exp(-u).
inline double from_log_gap(double u) { return -std::expm1(-u); }

/// int_{t0}^{t1} g(t, 1 - t) dt computed in u = -log(1-t); g receives the exact gap 1 - t.
QuadratureResult integrate_toward_boundary(const std::function<double(double, double)>& g, double t0, double t1,
                                           QuadratureTolerance tol = {});

/// Nested integral over panels in the u = -log(1-t) variable.
///
/// inner(t, gap) is integrated cumulatively: G(t) = int_{t0}^{t} inner. outer(t, gap, G(t))
/// is then integrated panel by panel. Panel boundaries are given in t. The
/// returned cumulative values satisfy outer_cumulative[k] = int_{t0}^{boundaries[k]} outer
/// and inner_cumulative[k] = G(boundaries[k]).
struct NestedResult {
  std::vector<double> boundaries;
  std::vector<double> inner_cumulative;
  std::vector<double> outer_cumulative;
  bool converged = true;
};
NestedResult nested_toward_boundary(const std::function<double(double, double)>& inner,
                                    const std::function<double(double, double, double)>& outer, double t0,
                                    const std::vector<double>& boundaries, QuadratureTolerance tol = {});

/// Adaptive Gauss-Kronrod (15-point) on [a, b]; breakpoints split the interval first.
QuadratureResult gauss_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-10,
                               int max_depth = 15);
QuadratureResult gauss_kronrod_split(const std::function<double(double)>& f, std::vector<double> breakpoints,
                                     double rel_tol = 1e-10, int max_depth = 15);

/// Periodic trapezoid rule (1/2pi) int_0^{2pi} h(theta) d theta with n equally spaced nodes.
Complex periodic_trapezoid(const std::function<Complex(double)>& h, int n);

}  // namespace discode
