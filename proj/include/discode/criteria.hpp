#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "discode/estimate.hpp"
#include "discode/expr.hpp"
#include "discode/spaces.hpp"

namespace discode {

enum class Verdict { satisfied, violated, inconclusive };
const char* to_string(Verdict v);

struct ConditionReport {
  std::string criterion;
  double quantity = 0.0;
  std::optional<double> threshold;
  Verdict verdict = Verdict::inconclusive;
  std::vector<TracePoint> trace;
  TraceAnalysis analysis;
  /// Named side quantities (max_n, extrapolated tail, ...), ordered by key.
  std::map<std::string, double> extras;
};

/// P(u) = M_inf(t, A) (1 - t)^2 tabulated on a uniform grid in u = -log(1 - t) and
/// interpolated by 6-point Lagrange; M_inf(t, A) = P(u) / (1 - t)^2.
///
/// Nested integrals of the max modulus only touch the table, so each circle is scanned once.
class MaxModulusProfile {
 public:
  MaxModulusProfile(const Expr& coefficient, double t0, double t1, double du = 1.0 / 32.0);

  double u0() const { return u0_; }
  double u1() const { return u1_; }
  /// P at u = -log(1 - t).
  double scaled(double u) const;
  /// M_inf(t, A) from t and its exact gap.
  double max_modulus(double t, double gap) const;

 private:
  double u0_, u1_, du_;
  std::vector<double> values_;
};

/// Truncation depth of all improper integrals toward the boundary.
inline constexpr double kBoundaryDepth = 1e-10;

/// sup_{r0 < r < 1} M(r, A) (1 - r)^2 exp(int_{r0}^{r} M(t, A) (1 - t) dt); satisfied iff the trace stabilises.
ConditionReport check_thm1(const Expr& coefficient, double r0);

/// sup |A(z)| (1 - |z|)^2 log(1/(1 - |z|)) against the strict threshold 1.
ConditionReport check_bz(const Expr& coefficient, const SupGrid& g = {});

/// ||A||_{L^1} against the strict threshold 4/n; extras["max_n"] is the largest n with ||A|| < 4/n
/// (absent when A = 0, which satisfies every n).
ConditionReport check_power_bloch(const Expr& coefficient, int n, const SupGrid& g = {});

/// ||A||_{L^0} <= 1.
ConditionReport check_nehari(const Expr& coefficient, const SupGrid& g = {});

/// sup_{R < |z| < 1 - 1e-10} |A(z)| (1 - |z|^2)^2 <= 1.
ConditionReport check_finite_zeros(const Expr& coefficient, double R, const SupGrid& g = {});

/// sup_a log(e/(1 - |a|)) int |A(z)| (1 - |phi_a(z)|^2) dm(z). No threshold: always inconclusive.
ConditionReport check_bmoa_integral(const Expr& coefficient, const std::vector<Complex>& a_grid);

/// int_{r0}^{1} M(r, A)^2 exp(2 int_{r0}^{r} M(t, A)(1 - t) dt) (1 - r^2)^3 dr with the tail traced over
/// depths 1 - 10^{-k}, k = 4..10; satisfied iff the trace stabilises.
ConditionReport check_vmoa_integral(const Expr& coefficient, double r0);

/// sup |A(z)| (1 - |z|^2)^2 log(e/(1 - |z|)) log log(e/(1 - |z|)); satisfied iff finite and stable.
ConditionReport check_loglog(const Expr& coefficient, const SupGrid& g = {});

/// (log(e/(1-r)))^{-alpha} int_0^r int_0^t (log(e/(1-s)))^{alpha-1} (1-s^2)^{-2} ds dt.
double i_alpha(double r, double alpha);

}  // namespace discode
