#pragma once

#include <functional>
#include <string>
#include <vector>

#include "discode/expr.hpp"

namespace discode {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Polar sampling of the disc: circles of increasing radius, each with a
/// uniform angular grid starting at theta = 0.
///
/// Radii are stored together with their exact complements 1 - r so that the
/// boundary weights (1 - |z|^2, log(e/(1 - |z|))) keep full relative accuracy
/// at depths like 1 - 1e-10.
class DiscGrid {
 public:
  DiscGrid(std::vector<double> radii, std::vector<int> angles, std::string policy);

  /// Radii r_j = 1 - 10^(-j*step), j = first..levels; e.g. step 0.25 and 40 levels reach 1 - 1e-10.
  static DiscGrid boundary_refined(int levels = 40, double step = 0.25, int angles = 512, int first = 1);
  /// Radii r_j = r_start + ... geometric toward 1 from r_start, then boundary_refined radii above it.
  static DiscGrid boundary_refined_from(double r_start, int levels = 40, double step = 0.25, int angles = 512);
  /// n_radii equally spaced radii in (0, r_max] (plus the origin when include_origin).
  static DiscGrid uniform(double r_max, int n_radii, int angles, bool include_origin = true);

  std::size_t size() const { return radii_.size(); }
  double radius(std::size_t i) const { return radii_[i]; }
  double one_minus_radius(std::size_t i) const { return gaps_[i]; }
  int angles(std::size_t i) const { return angles_[i]; }
  const std::vector<double>& radii() const { return radii_; }
  const std::string& policy() const { return policy_; }
  std::size_t point_count() const;

  /// Calls visit(z, ring_index) for every grid point, ring by ring.
  void for_each_point(const std::function<void(Complex, std::size_t)>& visit) const;

 private:
  std::vector<double> radii_;
  std::vector<double> gaps_;
  std::vector<int> angles_;
  std::string policy_;
};

struct CircleMax {
  double value = 0.0;
  double theta = 0.0;
};

inline constexpr int kDefaultAngles = 512;

/// max over |z| = r of h(z): uniform angular scan followed by golden-section
/// refinement around the best three scan angles. Throws EvaluationError when h
/// is non-finite at a scanned point.
CircleMax circle_max(const std::function<double(Complex)>& h, double r, int angles = kDefaultAngles);

/// Maximum modulus M_inf(r, f) and the refined maximizing angle in [0, 2*pi).
CircleMax max_modulus(const Expr& f, double r, int angles = kDefaultAngles);

struct Mobius {
  Expr phi;
  Expr phi_prime;
};

/// Disc automorphism phi_a(z) = (a - z) / (1 - conj(a) z) and its derivative.
Mobius mobius(Complex a);

/// 1 - |phi_a(z)|^2 via the factored identity (1-|a|^2)(1-|z|^2)/|1-conj(a) z|^2.
double mobius_gap(Complex a, Complex z);

/// Chordal distance on the Riemann sphere; infinite arguments denote the point at infinity.
double chordal_distance(Complex u, Complex v);

}  // namespace discode
