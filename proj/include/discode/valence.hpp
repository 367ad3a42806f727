#pragma once

#include <vector>

#include "discode/expr.hpp"

namespace discode {

/// Number of zeta-points of f in |z| < r by the argument principle.
struct CountResult {
  Complex zeta{};
  double radius = 0.0;
  int count = 0;
  /// Distance of the contour integral to the nearest integer.
  double residual = 0.0;
  int nodes = 0;
};

/// (1/2 pi i) closed integral of f' / (f - zeta) over |z| = r, trapezoid rule with doubling from
/// 2048 nodes until the rounding residual is below 1e-3 and two levels agree.
/// Throws DomainError when f - zeta comes within 1e-8 of zero on the contour,
/// ConvergenceError when the residual stays above 0.25.
CountResult count_preimages(const Expr& f, Complex zeta, double r);

/// Area-formula estimate of int n(f, w) dm(w) over D(zeta0, 1), restricted to preimages in |z| < r_inner:
/// int_{|z| < r_inner} |f'(z)|^2 [ |f(z) - zeta0| < 1 ] dm(z).
double valence_integral(const Expr& f, Complex zeta0, double r_inner);

/// sup over a zeta-grid of valence_integral; the grid has spacing `spacing` and covers the
/// sampled image of |z| <= r_inner padded by 2.
struct ValenceSup {
  double value = 0.0;
  Complex zeta{};
  std::vector<Complex> grid;
};
ValenceSup valence_sup(const Expr& f, double r_inner, double spacing = 0.5);

/// Hille zeros z_n = (e^{pi n / gamma} - 1) / (e^{pi n / gamma} + 1) for n = n_lo..n_hi.
std::vector<double> hille_zeros(double gamma, int n_lo, int n_hi);

/// Real zeros of f on [a, b] for f real on the reals: sign changes of Re f on a grid uniform in
/// atanh(x), bisection, then Newton polish. Throws ConvergenceError if a polished zero leaves
/// |f| above the tolerance.
std::vector<double> find_zeros_on_segment(const Expr& f, double a, double b, int samples = 4096);

}  // namespace discode
