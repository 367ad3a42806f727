#include "discode/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "discode/errors.hpp"
#include "discode/ode.hpp"
#include "discode/parallel.hpp"
#include "discode/valence.hpp"

namespace discode {

namespace {

const std::vector<Complex>& wronskian_points() {
  static const std::vector<Complex> pts{{0.0, 0.0},  {0.3, 0.0},  {0.0, 0.5}, {-0.4, 0.6},
                                        {0.9, 0.0},  {0.0, -0.9}, {0.6, 0.6}, {-0.7, -0.2}};
  return pts;
}

constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace

SolutionPair make_solution_pair(const Expr& f1, const Expr& f2) {
  const Expr d1 = diff(f1), d2 = diff(f2);
  std::vector<Complex> w;
  for (const Complex& z : wronskian_points()) w.push_back(f1(z) * d2(z) - d1(z) * f2(z));
  double scale = 0.0;
  for (const Complex& v : w) scale = std::max(scale, std::abs(v));
  double var = 0.0;
  for (const Complex& v : w) var = std::max(var, std::abs(v - w[0]));
  SolutionPair p{f1, f2, w[0], scale > 0.0 ? var / scale : 0.0, false};
  if (p.wronskian_variation > 1e-8) {
    std::ostringstream os;
    os << "Wronskian is not constant (relative variation " << p.wronskian_variation
       << "): f1 and f2 do not solve the same equation";
    throw DomainError(os.str());
  }
  p.normalized = std::abs(w[0] - 1.0) <= 1e-12;
  return p;
}

SolutionPair normalize_pair(const SolutionPair& p) {
  if (!(std::abs(p.wronskian_value) > 1e-14)) throw DomainError("normalize_pair: Wronskian vanishes (dependent pair)");
  SolutionPair out = p;
  if (p.wronskian_value != Complex(1.0)) out.f2 = Expr(1.0 / p.wronskian_value) * p.f2;
  out.wronskian_value = 1.0;
  out.normalized = true;
  return out;
}

Expr coefficient_from_pair(const SolutionPair& p) {
  if (!p.normalized) throw DomainError("coefficient_from_pair requires a normalized pair");
  const Expr d1 = diff(p.f1), d2 = diff(p.f2);
  return d1 * diff(d2) - diff(d1) * d2;
}

NormEstimate thm6_quantity(const Expr& coefficient, const SupGrid& g) {
  return sup_estimate(
      "thm6", [&](Complex z) { return std::abs(coefficient.eval_raw(z)); },
      [](double, double gap) { return std::pow(disc_gap(gap), 2.5); }, g.grid());
}

Thm6Report thm6_report(const SolutionPair& p, const SupGrid& g) {
  const SolutionPair n = p.normalized ? p : normalize_pair(p);
  Thm6Report rep;
  rep.quantity = thm6_quantity(coefficient_from_pair(n), g);
  rep.bloch_max = std::max(bloch_seminorm(n.f1, g).value, bloch_seminorm(n.f2, g).value);
  rep.ratio = rep.bloch_max > 0.0 ? rep.quantity.value / rep.bloch_max : kInfinity;
  return rep;
}

NormEstimate pair_infimum(const SolutionPair& p, const DiscGrid& grid) {
  std::vector<CircleMax> rings(grid.size());
  parallel_for(rings.size(), [&](std::size_t i) {
    rings[i] = circle_max(
        [&](Complex z) { return -(std::abs(p.f1.eval_raw(z)) + std::abs(p.f2.eval_raw(z))); }, grid.radius(i),
        grid.angles(i));
  });
  NormEstimate est;
  est.kind = "pair_infimum";
  est.grid = grid.policy();
  double best = kInfinity, points = 0.0;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    points += grid.angles(i);
    if (-rings[i].value < best) {
      best = -rings[i].value;
      est.argmax = std::polar(grid.radius(i), rings[i].theta);
    }
    est.trace.push_back({points, best, grid.one_minus_radius(i)});
  }
  est.value = best;
  est.classify();
  return est;
}

NormEstimate ratio_spherical(const SolutionPair& p, const DiscGrid& grid) {
  if (!p.normalized) throw DomainError("ratio_spherical requires a normalized pair");
  return sup_estimate(
      "ratio_spherical",
      [&](Complex z) {
        const double s = std::norm(p.f1.eval_raw(z)) + std::norm(p.f2.eval_raw(z));
        if (!(s > 0.0)) throw EvaluationError("ratio_spherical: both solutions vanish at a grid point");
        return 1.0 / s;
      },
      [](double, double) { return 1.0; }, grid);
}

double ratio_spherical_crosscheck(const SolutionPair& p, const std::vector<Complex>& points) {
  if (!p.normalized) throw DomainError("ratio_spherical_crosscheck requires a normalized pair");
  const Expr w = p.f1 / p.f2;
  const Expr dw = diff(w);
  double worst = 0.0;
  for (const Complex& z : points) {
    const double identity = 1.0 / (std::norm(p.f1(z)) + std::norm(p.f2(z)));
    const Complex wz = w.eval_raw(z);
    const double direct = std::abs(dw.eval_raw(z)) / (1.0 + std::norm(wz));
    worst = std::max(worst, std::abs(identity - direct) / identity);
  }
  return worst;
}

Expr schwarzian(const Expr& f) {
  const Expr d1 = diff(f);
  const Expr q = diff(d1) / d1;
  return diff(q) - 0.5 * q * q;
}

std::vector<Complex> locate_zeros(const Expr& f, double radius) {
  const int expected = count_preimages(f, 0.0, radius).count;
  if (expected == 0) return {};
  const Expr df = diff(f);
  std::vector<Complex> found;
  auto newton = [&](Complex z) -> std::optional<Complex> {
    for (int it = 0; it < 60; ++it) {
      const Complex fz = f.eval_raw(z), d = df.eval_raw(z);
      if (fz == Complex{}) return z;
      if (d == Complex{} || !std::isfinite(std::abs(fz)) || !std::isfinite(std::abs(d))) return std::nullopt;
      const Complex step = fz / d;
      z -= step;
      if (!(std::abs(z) < 1.0)) return std::nullopt;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) return z;
    }
    return std::nullopt;
  };
  for (int level = 0; level <= 5 && static_cast<int>(found.size()) < expected; ++level) {
    const int nr = 8 << level, na = 16 << level;
    for (int i = 1; i <= nr; ++i) {
      for (int k = 0; k < na; ++k) {
        const std::optional<Complex> z = newton(std::polar(radius * i / (nr + 1.0), 2.0 * kPi * (k + 0.5) / na));
        if (!z || !(std::abs(*z) < radius)) continue;
        const bool dup = std::any_of(found.begin(), found.end(), [&](Complex w) { return std::abs(w - *z) < 1e-8; });
        if (!dup) found.push_back(*z);
      }
    }
  }
  if (static_cast<int>(found.size()) < expected) {
    std::ostringstream os;
    os << "locate_zeros: argument principle counts " << expected << " zeros but Newton located " << found.size();
    throw ConvergenceError(os.str());
  }
  std::sort(found.begin(), found.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return found;
}

Separation zero_pole_separation(const SolutionPair& p, double radius) {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("zero_pole_separation requires 0 < radius < 1");
  const SolutionPair n = p.normalized ? p : normalize_pair(p);
  Separation s;
  s.zeros1 = locate_zeros(n.f1, radius);
  s.zeros2 = locate_zeros(n.f2, radius);
  for (const Complex& a : s.zeros1) {
    for (const Complex& b : s.zeros2) {
      const double d = std::abs(a - b);
      if (!s.min_distance || d < *s.min_distance) s.min_distance = d;
    }
  }
  const double sup = ratio_spherical(n, DiscGrid::uniform(radius, 32, 128)).value;
  s.bound = sup > 0.0 ? 1.0 / sup : kInfinity;
  return s;
}

OmittedValues omitted_values(const SolutionPair& p, const DiscGrid& grid) {
  std::vector<Complex> image;
  grid.for_each_point([&](Complex z, std::size_t) {
    const Complex a = p.f1.eval_raw(z), b = p.f2.eval_raw(z);
    image.push_back(b == Complex{} ? Complex(kInfinity, 0.0) : a / b);
  });
  std::vector<Complex> candidates{Complex(0.0), Complex(kInfinity, 0.0)};
  for (int k = -12; k <= 12; ++k) {
    for (int j = 0; j < 32; ++j) candidates.push_back(std::polar(std::pow(2.0, k / 2.0), 2.0 * kPi * j / 32.0));
  }
  std::vector<double> clearance(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    double c = kInfinity;
    for (const Complex& w : image) {
      if (std::isnan(w.real()) || std::isnan(w.imag())) continue;
      c = std::min(c, chordal_distance(candidates[i], w));
    }
    clearance[i] = c;
  });
  OmittedValues out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (clearance[i] > clearance[best]) best = i;
  }
  // The second candidate balances its own clearance against distance from the first.
  std::size_t second = best == 0 ? 1 : 0;
  double score = -1.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (i == best) continue;
    const double s = std::min(clearance[i], chordal_distance(candidates[i], candidates[best]));
    if (s > score) {
      score = s;
      second = i;
    }
  }
  out.first = candidates[best];
  out.second = candidates[second];
  out.clearance_first = clearance[best];
  out.clearance_second = clearance[second];
  out.covered = clearance[best] < 1e-2;
  return out;
}

}  // namespace discode
