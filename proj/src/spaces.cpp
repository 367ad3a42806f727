#include "discode/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "discode/errors.hpp"
#include "discode/parallel.hpp"
#include "discode/quadrature.hpp"

namespace discode {

DiscGrid SupGrid::grid() const {
  std::vector<double> radii;
  for (int i = 0; i <= 8; ++i) radii.push_back(0.05 * i);
  for (int j = 1; j <= levels; ++j) {
    const double r = 1.0 - std::pow(10.0, -j * step);
    if (r > radii.back()) radii.push_back(r);
  }
  std::ostringstream id;
  id << "sup(step=" << step << ",levels=" << levels << ",angles=" << angles << ")";
  std::vector<int> counts(radii.size(), angles);
  counts[0] = 1;
  return DiscGrid(radii, counts, id.str());
}

NormEstimate sup_estimate(const std::string& kind, const std::function<double(Complex)>& g,
                          const RadialWeight& weight, const DiscGrid& grid) {
  const std::size_t rings = grid.size();
  std::vector<CircleMax> ring_max(rings);
  parallel_for(rings, [&](std::size_t i) {
    CircleMax m = circle_max(g, grid.radius(i), grid.angles(i));
    m.value *= weight(grid.radius(i), grid.one_minus_radius(i));
    ring_max[i] = m;
  });

  NormEstimate est;
  est.kind = kind;
  est.grid = grid.policy();
  double best = -1.0, points = 0.0;
  for (std::size_t i = 0; i < rings; ++i) {
    points += grid.angles(i);
    if (ring_max[i].value > best) {
      best = ring_max[i].value;
      est.argmax = std::polar(grid.radius(i), ring_max[i].theta);
    }
    est.trace.push_back({points, best, grid.one_minus_radius(i)});
  }
  est.value = best;
  est.classify();
  return est;
}

NormEstimate growth_norm(const Expr& coefficient, double alpha, const SupGrid& g) {
  if (!(alpha >= 0.0)) throw DomainError("growth_norm requires alpha >= 0");
  std::ostringstream kind;
  kind << "growth(alpha=" << alpha << ")";
  return sup_estimate(
      kind.str(), [&](Complex z) { return std::abs(coefficient.eval_raw(z)); },
      [alpha](double, double gap) {
        const double w = disc_gap(gap);
        return w * w * std::pow(log_weight(gap), alpha);
      },
      g.grid());
}

NormEstimate bloch_seminorm(const Expr& f, const SupGrid& g) {
  const Expr df = diff(f);
  return sup_estimate(
      "bloch", [&](Complex z) { return std::abs(df.eval_raw(z)); },
      [](double, double gap) { return disc_gap(gap); }, g.grid());
}

NormEstimate bloch_seminorm(const std::vector<RaySolution>& rays, const SupGrid& g) {
  const DiscGrid grid = g.grid();
  NormEstimate est;
  est.kind = "bloch(rays)";
  est.grid = grid.policy();
  double best = -1.0, points = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    for (const RaySolution& ray : rays) {
      if (r > ray.r_max()) continue;
      points += 1.0;
      const double v = std::abs(ray.derivative(r)) * disc_gap(grid.one_minus_radius(i));
      if (v > best) {
        best = v;
        est.argmax = ray.point(r);
      }
    }
    if (best >= 0.0) est.trace.push_back({points, best, grid.one_minus_radius(i)});
  }
  est.value = std::max(best, 0.0);
  est.classify();
  return est;
}

NormEstimate bb_product(const Expr& f, const Expr& coefficient, const SupGrid& g) {
  return sup_estimate(
      "bb", [&](Complex z) { return std::abs(f.eval_raw(z)) * std::abs(coefficient.eval_raw(z)); },
      [](double, double gap) {
        const double w = disc_gap(gap);
        return w * w;
      },
      g.grid());
}

NormEstimate spherical_seminorm(const Expr& f, const SupGrid& g) {
  const Expr df = diff(f);
  return sup_estimate(
      "spherical",
      [&](Complex z) {
        const double m = std::abs(f.eval_raw(z));
        return std::abs(df.eval_raw(z)) / (1.0 + m * m);
      },
      [](double, double gap) { return disc_gap(gap); }, g.grid());
}

NormEstimate log_growth_ratio(const Expr& f, double alpha, const SupGrid& g) {
  if (!(alpha > 0.0)) throw DomainError("log_growth_ratio requires alpha > 0");
  std::ostringstream kind;
  kind << "log_growth(alpha=" << alpha << ")";
  return sup_estimate(
      kind.str(), [&](Complex z) { return std::abs(f.eval_raw(z)); },
      [alpha](double, double gap) { return std::pow(log_weight(gap), -alpha); }, g.grid());
}

namespace {

double circle_mean(const std::function<double(Complex)>& h, double r, double rel_tol, const char* what) {
  int n = 256;
  auto mean = [&](int m) {
    return periodic_trapezoid([&](double t) { return Complex(h(std::polar(r, t)), 0.0); }, m).real();
  };
  double prev = mean(n);
  while (n < (1 << 22)) {
    n *= 2;
    const double cur = mean(n);
    if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + 1e-300) return cur;
    prev = cur;
  }
  throw ConvergenceError(std::string(what) + ": angular refinement did not converge");
}

}  // namespace

double hardy_mean(const Expr& f, double p, double r) {
  if (!(p > 0.0)) throw DomainError("hardy_mean requires p > 0");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("hardy_mean requires 0 <= r < 1");
  return circle_mean([&](Complex z) { return std::pow(std::abs(f(z)), p); }, r, 1e-12, "hardy_mean");
}

double proximity(const Expr& f, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("proximity requires 0 <= r < 1");
  return circle_mean([&](Complex z) { return std::max(std::log(std::abs(f(z))), 0.0); }, r, 1e-9, "proximity");
}

namespace {
// Boost's Gauss-Kronrod error estimate grows with subdivision once the value is converged to
// rounding, so tight tolerances would always run to the depth cap. The caps only bound the work.
constexpr int kAngularDepth = 4;
constexpr int kRadialDepth = 5;
// Geometric ratio of the graded angular panels. With the singular direction at distance >= gap
// from every panel, a 10-20 point Gauss rule on a ratio-3 panel is accurate to ~1e-12 or better.
constexpr double kGrading = 3.0;

struct GaussRule {
  const double* x;
  const double* w;
  std::size_t n;
};

template <unsigned N>
GaussRule rule_of() {
  using G = boost::math::quadrature::gauss<double, N>;
  return {G::abscissa().data(), G::weights().data(), G::abscissa().size()};
}

GaussRule rule_for(double rel_tol) {
  if (rel_tol >= 1e-7) return rule_of<10>();
  if (rel_tol >= 1e-11) return rule_of<15>();
  return rule_of<20>();
}

// Boost stores the non-negative half of the symmetric rule.
template <class F>
double gauss_apply(const GaussRule& g, F&& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (g.x[i] == 0.0) {
      acc += g.w[i] * f(c);
    } else {
      acc += g.w[i] * (f(c - h * g.x[i]) + f(c + h * g.x[i]));
    }
  }
  return acc * h;
}

std::vector<double> angular_panels(const std::vector<double>& angular_breaks, double gap, double ratio) {
  std::vector<double> br{0.0, 2.0 * kPi};
  auto wrap = [](double x) {
    x = std::fmod(x, 2.0 * kPi);
    return x < 0.0 ? x + 2.0 * kPi : x;
  };
  for (double b : angular_breaks) {
    const double t = wrap(b);
    br.push_back(t);
    for (double w = std::max(gap, 1e-12); w < kPi; w *= ratio) {
      br.push_back(wrap(t - w));
      br.push_back(wrap(t + w));
    }
  }
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end(), [](double x, double y) { return y - x < 1e-15; }), br.end());
  return br;
}
}  // namespace

std::vector<double> polar_area_integral(const std::function<double(Complex, double)>& h,
                                        const std::vector<double>& depths,
                                        const std::vector<double>& angular_breaks, double rel_tol,
                                        PolarRule rule) {
  const GaussRule g = rule_for(rel_tol);
  auto ring = [&](double rho, double gap) {
    if (rule == PolarRule::adaptive) {
      const std::vector<double> br = angular_panels(angular_breaks, gap, 10.0);
      return gauss_kronrod_split([&](double th) { return h(std::polar(rho, th), gap); }, br, rel_tol, kAngularDepth)
                 .value *
             rho;
    }
    const std::vector<double> br = angular_panels(angular_breaks, gap, kGrading);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
      acc += gauss_apply(g, [&](double th) { return h(std::polar(rho, th), gap); }, br[i], br[i + 1]);
    }
    return acc * rho;
  };
  auto radial = [&](const auto& f, double a, double b) {
    if (rule == PolarRule::adaptive) return gauss_kronrod(f, a, b, rel_tol, kRadialDepth).value;
    return gauss_apply(g, f, a, b);
  };

  std::vector<double> out;
  double acc = 0.0;
  double rho_prev = 0.0;
  std::vector<double> targets = depths;
  std::sort(targets.begin(), targets.end());
  for (double target : targets) {
    while (rho_prev < target) {
      double next;
      if (rho_prev < 0.5) {
        // Panels shrinking geometrically toward the origin absorb the log(1/|z|) weights.
        next = std::min(0.5, target);
        double lo = rho_prev == 0.0 ? next * std::pow(0.25, 12) : rho_prev;
        if (rho_prev == 0.0) {
          acc += radial([&](double rho) { return ring(rho, 1.0 - rho); }, 0.0, lo);
        }
        for (double hi = std::min(next, lo * 4.0); lo < next; lo = hi, hi = std::min(next, hi * 4.0)) {
          acc += radial([&](double rho) { return ring(rho, 1.0 - rho); }, lo, hi);
        }
      } else {
        const double u0 = to_log_gap(rho_prev);
        const double u1 = std::min(u0 + 0.5, to_log_gap(target));
        next = u1 >= to_log_gap(target) ? target : from_log_gap(u1);
        acc += radial(
            [&](double u) {
              const double gap = std::exp(-u);
              return ring(from_log_gap(u), gap) * gap;
            },
            u0, u1);
      }
      rho_prev = next;
    }
    out.push_back(acc);
  }
  return out;
}

TranslateNorm translate_h2_norm(const Expr& f, Complex a, double rel_tol) {
  if (!(std::abs(a) < 1.0)) throw DomainError("translate_h2_norm requires |a| < 1");
  const Expr df = diff(f);
  const Complex ac = std::conj(a);
  const double scale = 1.0 - std::norm(a);
  auto h = [&](Complex z, double) {
    if (z == Complex{}) return 0.0;
    const Complex den = 1.0 - ac * z;
    const Complex w = (a - z) / den;
    const Complex dphi = -scale / (den * den);
    const double v = std::norm(df.eval_raw(w) * dphi) * (-std::log(std::abs(z)));
    return std::isfinite(v) ? v : 0.0;
  };
  std::vector<double> breaks;
  if (a != Complex{}) breaks.push_back(std::arg(a));
  if (df.singularities()) {
    for (const Complex& s : *df.singularities()) {
      // phi_a is an involution: the preimage of s is phi_a(s).
      breaks.push_back(std::arg((a - s) / (1.0 - ac * s)));
    }
  } else {
    breaks.push_back(0.0);
  }
  std::vector<double> depths;
  for (int k = 1; k <= 10; ++k) depths.push_back(1.0 - std::pow(10.0, -k));
  std::vector<double> cum = polar_area_integral(h, depths, breaks, rel_tol);
  TranslateNorm out;
  out.a = a;
  for (double& c : cum) c *= 2.0 / kPi;
  out.tail = cum;
  out.value = cum.back();
  // Increments may rise until depth ~ 1 - |a|, where g_a' concentrates; only the last ones are the tail.
  for (std::size_t k = cum.size() - 3; k < cum.size(); ++k) {
    const double inc = cum[k] - cum[k - 1], prev = cum[k - 1] - cum[k - 2];
    if (inc > prev + 1e-12 * std::abs(out.value) + 1e-300) out.tail_monotone = false;
  }
  return out;
}

std::vector<Complex> default_bmoa_grid() {
  std::vector<Complex> out;
  for (int j = 0; j <= 8; ++j) {
    const double r = 1.0 - std::pow(10.0, -j / 2.0);
    for (int k = 0; k < 16; ++k) {
      out.push_back(std::polar(r, 2.0 * kPi * k / 16.0));
      if (r == 0.0) break;
    }
  }
  return out;
}

NormEstimate bmoa_norm(const Expr& f, const std::vector<Complex>& a_grid, double rel_tol) {
  for (const Complex& a : a_grid) {
    if (!(std::abs(a) < 1.0)) throw DomainError("bmoa_norm requires every a inside the unit disc");
  }
  std::vector<Complex> grid = a_grid;
  std::stable_sort(grid.begin(), grid.end(), [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
  std::vector<TranslateNorm> norms(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { norms[i] = translate_h2_norm(f, grid[i], rel_tol); });

  NormEstimate est;
  est.kind = "bmoa";
  est.grid = "translates";
  double best = -1.0;
  bool tails_ok = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    tails_ok = tails_ok && norms[i].tail_monotone;
    if (norms[i].value > best) {
      best = norms[i].value;
      est.argmax = grid[i];
    }
    const bool ring_end = i + 1 == grid.size() || std::abs(grid[i + 1]) - std::abs(grid[i]) > 1e-12;
    if (ring_end) est.trace.push_back({static_cast<double>(i + 1), best, 1.0 - std::abs(grid[i])});
  }
  est.value = std::max(best, 0.0);
  est.classify();
  if (!tails_ok) {
    est.converged = false;
    est.divergent = false;
  }
  return est;
}

std::vector<ProfilePoint> vmoa_profile(const Expr& f, const std::vector<double>& radii, int angles, double rel_tol) {
  std::vector<ProfilePoint> out;
  for (double r : radii) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("vmoa_profile requires radii in [0, 1)");
    std::vector<double> vals(static_cast<std::size_t>(angles));
    parallel_for(vals.size(), [&](std::size_t k) {
      vals[k] = translate_h2_norm(f, std::polar(r, 2.0 * kPi * static_cast<double>(k) / angles), rel_tol).value;
    });
    out.push_back({r, *std::max_element(vals.begin(), vals.end())});
  }
  return out;
}

DirichletResult weighted_dirichlet(const Expr& f, double beta, double depth) {
  if (!(beta > 0.0)) throw DomainError("weighted_dirichlet requires beta > 0");
  if (!(depth > 0.0 && depth < 1.0)) throw DomainError("weighted_dirichlet requires 0 < depth < 1");
  const Expr df = diff(f);
  auto h = [&](Complex z, double gap) { return std::norm(df.eval_raw(z)) * std::pow(log_weight(gap), -beta); };
  std::vector<double> breaks;
  if (df.singularities()) {
    for (const Complex& s : *df.singularities()) breaks.push_back(std::arg(s));
  } else {
    breaks.push_back(0.0);
  }
  std::vector<double> depths;
  for (int k = 1;; ++k) {
    const double d = 1.0 - std::pow(10.0, -k);
    if (d > depth * (1.0 + 1e-15)) break;
    depths.push_back(d);
  }
  if (depths.empty() || depths.back() < depth * (1.0 - 1e-15)) depths.push_back(depth);
  DirichletResult out;
  out.cumulative = polar_area_integral(h, depths, breaks, 1e-10);
  out.value = out.cumulative.back();
  for (std::size_t k = 1; k < out.cumulative.size(); ++k) {
    out.increments.push_back(out.cumulative[k] - out.cumulative[k - 1]);
  }
  return out;
}

}  // namespace discode
