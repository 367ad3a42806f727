#include "discode/criteria.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <sstream>

#include "discode/disc.hpp"
#include "discode/errors.hpp"
#include "discode/parallel.hpp"
#include "discode/quadrature.hpp"

namespace discode {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

MaxModulusProfile::MaxModulusProfile(const Expr& coefficient, double t0, double t1, double du)
    : u0_(to_log_gap(t0)), u1_(to_log_gap(t1)), du_(du) {
  if (!(t0 >= 0.0 && t0 < t1 && t1 < 1.0)) throw DomainError("MaxModulusProfile requires 0 <= t0 < t1 < 1");
  // Three cells of margin past u1 keep the interpolation stencil centred at the far end.
  const auto cells = static_cast<std::size_t>(std::ceil((u1_ - u0_) / du_)) + 3;
  values_.resize(cells + 1);
  parallel_for(values_.size(), [&](std::size_t k) {
    const double u = u0_ + du_ * static_cast<double>(k);
    const double gap = std::exp(-u);
    values_[k] = discode::max_modulus(coefficient, from_log_gap(u)).value * gap * gap;
  });
}

double MaxModulusProfile::scaled(double u) const {
  const double x = (u - u0_) / du_;
  const auto last = static_cast<long>(values_.size()) - 1;
  if (x < -1e-9 || x > static_cast<double>(last) + 1e-9) throw DomainError("MaxModulusProfile: u outside the table");
  long k0 = static_cast<long>(std::floor(x)) - 2;
  k0 = std::clamp(k0, 0L, last - 5);
  double acc = 0.0;
  for (long i = k0; i < k0 + 6; ++i) {
    double w = 1.0;
    for (long j = k0; j < k0 + 6; ++j) {
      if (j != i) w *= (x - static_cast<double>(j)) / static_cast<double>(i - j);
    }
    acc += w * values_[static_cast<std::size_t>(i)];
  }
  return acc;
}

double MaxModulusProfile::max_modulus(double t, double gap) const { return scaled(to_log_gap(t)) / (gap * gap); }

namespace {

using Gauss = boost::math::quadrature::gauss<double, 10>;

// In u = -log(1 - t), M(t)(1 - t) dt = P(u) du, so the exponent int_{t0}^{t} M(s)(1 - s) ds is a plain
// integral of the tabulated P. Cells are uniform in u with the trace depths inserted as extra ends;
// per-cell Gauss-Legendre is exact for the degree-5 interpolant.
struct Exponent {
  const MaxModulusProfile& profile;
  std::vector<double> nodes;       // u at cell ends
  std::vector<double> cumulative;  // exponent at cell ends
  std::vector<int> mark;           // index into the requested depths, or -1

  Exponent(const MaxModulusProfile& p, double du, const std::vector<double>& depth_u) : profile(p) {
    std::vector<std::pair<double, int>> ends;
    for (double u = p.u0() + du; u < p.u1() - 1e-12; u += du) ends.emplace_back(u, -1);
    for (std::size_t i = 0; i < depth_u.size(); ++i) {
      if (depth_u[i] > p.u0() && depth_u[i] <= p.u1() + 1e-12) ends.emplace_back(depth_u[i], static_cast<int>(i));
    }
    ends.emplace_back(p.u1(), -1);
    std::sort(ends.begin(), ends.end());
    nodes.push_back(p.u0());
    cumulative.push_back(0.0);
    mark.push_back(-1);
    for (const auto& [u, m] : ends) {
      if (u - nodes.back() < 1e-12) {
        if (m >= 0) mark.back() = m;
        continue;
      }
      cumulative.push_back(cumulative.back() + segment(nodes.back(), u));
      nodes.push_back(u);
      mark.push_back(m);
    }
  }

  double segment(double a, double b) const {
    return Gauss::integrate([&](double v) { return profile.scaled(v); }, a, b);
  }
  double at(std::size_t cell, double u) const { return cumulative[cell] + segment(nodes[cell], u); }
};

constexpr double kProfileStep = 1.0 / 32.0;

std::vector<double> quarter_decade_depths(double r0) {
  std::vector<double> out;
  for (int j = 1; j <= 40; ++j) {
    const double gap = std::pow(10.0, -j / 4.0);
    if (1.0 - gap > r0) out.push_back(gap);
  }
  return out;
}

Verdict finiteness_verdict(const TraceAnalysis& a) {
  switch (a.verdict) {
    case TraceVerdict::converged: return Verdict::satisfied;
    case TraceVerdict::divergent: return Verdict::violated;
    case TraceVerdict::inconclusive: return Verdict::inconclusive;
  }
  return Verdict::inconclusive;
}

// Strict thresholds need the stabilised limit 1% below the threshold; non-strict ones accept equality.
Verdict threshold_verdict(const TraceAnalysis& a, double quantity, double threshold, bool strict) {
  const double slack = threshold * (1.0 + 1e-9);
  if (strict ? quantity >= threshold : quantity > slack) return Verdict::violated;
  if (a.verdict == TraceVerdict::divergent) return Verdict::violated;
  if (a.verdict != TraceVerdict::converged) return Verdict::inconclusive;
  if (strict ? a.extrapolated < 0.99 * threshold : a.extrapolated <= slack) return Verdict::satisfied;
  return Verdict::inconclusive;
}

ConditionReport from_estimate(const std::string& id, const NormEstimate& est) {
  ConditionReport rep;
  rep.criterion = id;
  rep.quantity = est.value;
  rep.trace = est.trace;
  rep.analysis = analyze_trace(est.trace);
  rep.extras["extrapolated"] = rep.analysis.extrapolated;
  rep.extras["tail_exponent"] = rep.analysis.tail_exponent;
  if (est.argmax) {
    rep.extras["argmax_re"] = est.argmax->real();
    rep.extras["argmax_im"] = est.argmax->imag();
  }
  return rep;
}

void check_r0(double r0) {
  if (!(r0 >= 0.0 && r0 < 1.0)) throw DomainError("r0 must satisfy 0 <= r0 < 1");
}

}  // namespace

ConditionReport check_thm1(const Expr& coefficient, double r0) {
  check_r0(r0);
  const double t_end = 1.0 - kBoundaryDepth;
  const MaxModulusProfile profile(coefficient, r0, t_end, kProfileStep);
  const std::vector<double> depths = quarter_decade_depths(r0);
  std::vector<double> depth_u;
  for (double gap : depths) depth_u.push_back(-std::log(gap));
  const Exponent expo(profile, kProfileStep, depth_u);

  ConditionReport rep;
  rep.criterion = "thm1";
  double best = 0.0;
  for (std::size_t k = 1; k < expo.nodes.size(); ++k) {
    best = std::max(best, profile.scaled(expo.nodes[k]) * std::exp(expo.cumulative[k]));
    if (expo.mark[k] >= 0) rep.trace.push_back({static_cast<double>(k), best, depths[expo.mark[k]]});
  }
  rep.quantity = best;
  rep.analysis = analyze_trace(rep.trace);
  rep.verdict = finiteness_verdict(rep.analysis);
  rep.extras["r0"] = r0;
  rep.extras["extrapolated"] = rep.analysis.extrapolated;
  rep.extras["tail_exponent"] = rep.analysis.tail_exponent;
  return rep;
}

ConditionReport check_bz(const Expr& coefficient, const SupGrid& g) {
  const NormEstimate est = sup_estimate(
      "bz", [&](Complex z) { return std::abs(coefficient.eval_raw(z)); },
      [](double, double gap) { return gap * gap * -std::log(gap); }, g.grid());
  ConditionReport rep = from_estimate("bz", est);
  rep.threshold = 1.0;
  rep.verdict = threshold_verdict(rep.analysis, rep.quantity, 1.0, true);
  return rep;
}

ConditionReport check_power_bloch(const Expr& coefficient, int n, const SupGrid& g) {
  if (n < 1) throw DomainError("check_power_bloch requires n >= 1");
  ConditionReport rep = from_estimate("power_bloch", growth_norm(coefficient, 1.0, g));
  rep.threshold = 4.0 / n;
  rep.verdict = threshold_verdict(rep.analysis, rep.quantity, *rep.threshold, true);
  rep.extras["n"] = n;
  if (rep.quantity > 0.0) rep.extras["max_n"] = std::ceil(4.0 / rep.quantity) - 1.0;
  return rep;
}

ConditionReport check_nehari(const Expr& coefficient, const SupGrid& g) {
  ConditionReport rep = from_estimate("nehari", growth_norm(coefficient, 0.0, g));
  rep.threshold = 1.0;
  rep.verdict = threshold_verdict(rep.analysis, rep.quantity, 1.0, false);
  return rep;
}

ConditionReport check_finite_zeros(const Expr& coefficient, double R, const SupGrid& g) {
  if (!(R > 0.0 && R < 1.0)) throw DomainError("check_finite_zeros requires 0 < R < 1");
  const DiscGrid grid = DiscGrid::boundary_refined_from(R, g.levels, g.step, g.angles);
  const NormEstimate est = sup_estimate(
      "finite_zeros", [&](Complex z) { return std::abs(coefficient.eval_raw(z)); },
      [](double, double gap) {
        const double w = disc_gap(gap);
        return w * w;
      },
      grid);
  ConditionReport rep = from_estimate("finite_zeros", est);
  rep.threshold = 1.0;
  rep.verdict = threshold_verdict(rep.analysis, rep.quantity, 1.0, false);
  rep.extras["R"] = R;
  return rep;
}

ConditionReport check_bmoa_integral(const Expr& coefficient, const std::vector<Complex>& a_grid) {
  if (a_grid.empty()) throw DomainError("check_bmoa_integral requires a non-empty a-grid");
  for (const Complex& a : a_grid) {
    if (!(std::abs(a) < 1.0)) throw DomainError("check_bmoa_integral requires every a inside the unit disc");
  }
  std::vector<double> depths;
  for (int k = 1; k <= 10; ++k) depths.push_back(1.0 - std::pow(10.0, -k));

  std::vector<std::vector<double>> per_a(a_grid.size());
  parallel_for(a_grid.size(), [&](std::size_t i) {
    const Complex a = a_grid[i];
    std::vector<double> breaks{std::arg(a)};
    if (coefficient.singularities()) {
      for (const Complex& s : *coefficient.singularities()) breaks.push_back(std::arg(s));
    } else {
      breaks.push_back(0.0);
    }
    const double weight = log_weight(1.0 - std::abs(a));
    std::vector<double> cum = polar_area_integral(
        [&](Complex z, double) { return std::abs(coefficient.eval_raw(z)) * mobius_gap(a, z); }, depths, breaks,
        1e-9);
    for (double& c : cum) c *= weight;
    per_a[i] = std::move(cum);
  });

  ConditionReport rep;
  rep.criterion = "bmoa_integral";
  std::size_t best_a = 0;
  for (std::size_t k = 0; k < depths.size(); ++k) {
    double best = 0.0;
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
      if (per_a[i][k] > best) {
        best = per_a[i][k];
        if (k + 1 == depths.size()) best_a = i;
      }
    }
    rep.trace.push_back({static_cast<double>(a_grid.size() * (k + 1)), best, 1.0 - depths[k]});
  }
  rep.quantity = rep.trace.back().value;
  rep.analysis = analyze_trace(rep.trace);
  rep.verdict = Verdict::inconclusive;
  rep.extras["argmax_a_re"] = a_grid[best_a].real();
  rep.extras["argmax_a_im"] = a_grid[best_a].imag();
  rep.extras["extrapolated"] = rep.analysis.extrapolated;
  return rep;
}

ConditionReport check_vmoa_integral(const Expr& coefficient, double r0) {
  check_r0(r0);
  const double t_end = 1.0 - kBoundaryDepth;
  const MaxModulusProfile profile(coefficient, r0, t_end, kProfileStep);
  std::vector<double> depth_u, depth_gap;
  for (int k = 4; k <= 10; ++k) {
    depth_u.push_back(k * std::log(10.0));
    depth_gap.push_back(std::pow(10.0, -k));
  }
  const Exponent expo(profile, kProfileStep, depth_u);

  // In u the integrand M^2 exp(2E) (1 - r^2)^3 dr becomes P(u)^2 (2 - gap)^3 exp(2E(u)) du.
  auto integrand = [&](std::size_t cell, double u) {
    const double gap = std::exp(-u);
    const double p = profile.scaled(u);
    const double w = 2.0 - gap;
    return p * p * w * w * w * std::exp(2.0 * expo.at(cell, u));
  };

  ConditionReport rep;
  rep.criterion = "vmoa_integral";
  double acc = 0.0;
  for (std::size_t cell = 0; cell + 1 < expo.nodes.size(); ++cell) {
    acc += Gauss::integrate([&](double u) { return integrand(cell, u); }, expo.nodes[cell], expo.nodes[cell + 1]);
    const int m = expo.mark[cell + 1];
    if (m >= 0) rep.trace.push_back({static_cast<double>(cell + 1), acc, depth_gap[m]});
  }
  rep.quantity = acc;
  rep.analysis = analyze_trace(rep.trace);
  rep.verdict = finiteness_verdict(rep.analysis);
  rep.extras["r0"] = r0;
  rep.extras["extrapolated"] = rep.analysis.extrapolated;
  rep.extras["tail_exponent"] = rep.analysis.tail_exponent;
  return rep;
}

ConditionReport check_loglog(const Expr& coefficient, const SupGrid& g) {
  const NormEstimate est = sup_estimate(
      "loglog", [&](Complex z) { return std::abs(coefficient.eval_raw(z)); },
      [](double, double gap) {
        const double w = disc_gap(gap);
        const double L = log_weight(gap);
        return w * w * L * std::log(L);
      },
      g.grid());
  ConditionReport rep = from_estimate("loglog", est);
  rep.verdict = finiteness_verdict(rep.analysis);
  return rep;
}

double i_alpha(double r, double alpha) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("i_alpha requires 0 < r < 1");
  if (!(alpha > 0.0)) throw DomainError("i_alpha requires alpha > 0");
  auto inner = [alpha](double, double gap) {
    const double w = disc_gap(gap);
    return std::pow(log_weight(gap), alpha - 1.0) / (w * w);
  };
  auto outer = [](double, double, double G) { return G; };
  std::vector<double> bounds;
  const double ur = to_log_gap(r);
  for (double u = 1.0; u < ur; u += 1.0) bounds.push_back(from_log_gap(u));
  bounds.push_back(r);
  const NestedResult res = nested_toward_boundary(inner, outer, 0.0, bounds, {1e-13, 1e-11, 40});
  if (!res.converged) throw ConvergenceError("i_alpha: nested quadrature did not converge");
  return res.outer_cumulative.back() * std::pow(log_weight(1.0 - r), -alpha);
}

}  // namespace discode
