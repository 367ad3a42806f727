#pragma once

#include <optional>
#include <string>
#include <vector>

#include "discode/disc.hpp"
#include "discode/estimate.hpp"
#include "discode/expr.hpp"
#include "discode/spaces.hpp"

namespace discode {

/// Two solutions of one equation together with their (constant) Wronskian.
struct SolutionPair {
  Expr f1;
  Expr f2;
  Complex wronskian_value{};
  /// Relative variation of the Wronskian over the test points.
  double wronskian_variation = 0.0;
  bool normalized = false;
};

/// Builds a pair, measuring W = f1 f2' - f1' f2 at fixed points of |z| <= 0.9.
/// Throws DomainError if W varies by more than 1e-8 relatively (not solutions of one equation).
SolutionPair make_solution_pair(const Expr& f1, const Expr& f2);

/// f2 rescaled by 1/W so that W = 1. Throws DomainError when |W| is negligible (dependent pair).
SolutionPair normalize_pair(const SolutionPair& p);

/// A = f1' f2'' - f1'' f2' for a normalized pair.
Expr coefficient_from_pair(const SolutionPair& p);

/// sup |A(z)| (1 - |z|^2)^{5/2}.
NormEstimate thm6_quantity(const Expr& coefficient, const SupGrid& g = {});

/// thm6_quantity of the recovered coefficient together with max(||f1||_B, ||f2||_B) and their ratio.
struct Thm6Report {
  NormEstimate quantity;
  double bloch_max = 0.0;
  double ratio = 0.0;
};
Thm6Report thm6_report(const SolutionPair& p, const SupGrid& g = {});

/// min over the grid of |f1| + |f2| (an upper bound for the infimum); the trace is the running min.
NormEstimate pair_infimum(const SolutionPair& p, const DiscGrid& grid);

/// sup over the grid of 1 / (|f1|^2 + |f2|^2), the spherical derivative of w = f1 / f2 for a normalized pair.
NormEstimate ratio_spherical(const SolutionPair& p, const DiscGrid& grid);

/// Largest relative disagreement between 1 / (|f1|^2 + |f2|^2) and |w'| / (1 + |w|^2) at the points.
double ratio_spherical_crosscheck(const SolutionPair& p, const std::vector<Complex>& points);

/// S_f = (f''/f')' - (1/2)(f''/f')^2.
Expr schwarzian(const Expr& f);

struct Separation {
  std::vector<Complex> zeros1;
  std::vector<Complex> zeros2;
  std::optional<double> min_distance;
  /// 1 / sup w^#, reported for comparison.
  double bound = 0.0;
};

/// Zeros of f1 and f2 in |z| < radius (argument-principle counts plus Newton from a seed lattice)
/// and their minimal pairwise distance.
Separation zero_pole_separation(const SolutionPair& p, double radius);

/// Zeros of f in |z| < radius. Throws ConvergenceError when Newton finds fewer zeros than the
/// argument principle counts.
std::vector<Complex> locate_zeros(const Expr& f, double radius);

/// Two candidate omitted values of w = f1 / f2: points of a polar lattice in the w-plane (plus infinity)
/// with maximal chordal clearance from the sampled image. Heuristic, not certified.
struct OmittedValues {
  Complex first{};
  Complex second{};
  double clearance_first = 0.0;
  double clearance_second = 0.0;
  /// Every lattice candidate lies within the coverage tolerance of the image.
  bool covered = false;
  std::string label = "heuristic, not certified";
};
OmittedValues omitted_values(const SolutionPair& p, const DiscGrid& grid);

}  // namespace discode
