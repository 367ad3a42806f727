#include "discode/disc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "discode/errors.hpp"

namespace discode {

DiscGrid::DiscGrid(std::vector<double> radii, std::vector<int> angles, std::string policy)
    : radii_(std::move(radii)), angles_(std::move(angles)), policy_(std::move(policy)) {
  if (radii_.size() != angles_.size()) throw DomainError("DiscGrid: radii and angle counts differ in length");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] >= 0.0 && radii_[i] < 1.0)) throw DomainError("DiscGrid: radius outside [0,1)");
    if (i > 0 && !(radii_[i] > radii_[i - 1])) throw DomainError("DiscGrid: radii must increase strictly");
    // The origin is a single point; every other circle needs real angular resolution.
    if (radii_[i] == 0.0 ? angles_[i] != 1 : angles_[i] < 64) {
      throw DomainError("DiscGrid: the origin takes 1 angle, other circles at least 64");
    }
  }
  gaps_.resize(radii_.size());
  std::transform(radii_.begin(), radii_.end(), gaps_.begin(), [](double r) { return 1.0 - r; });
}

DiscGrid DiscGrid::boundary_refined(int levels, double step, int angles, int first) {
  std::vector<double> radii;
  for (int j = first; j <= levels; ++j) radii.push_back(1.0 - std::pow(10.0, -j * step));
  std::ostringstream id;
  id << "boundary-refined(step=" << step << ",levels=" << levels << ")";
  return DiscGrid(radii, std::vector<int>(radii.size(), angles), id.str());
}

DiscGrid DiscGrid::boundary_refined_from(double r_start, int levels, double step, int angles) {
  std::vector<double> radii{r_start};
  for (int j = 1; j <= levels; ++j) {
    const double r = 1.0 - std::pow(10.0, -j * step);
    if (r > r_start) radii.push_back(r);
  }
  std::ostringstream id;
  id << "boundary-refined-from(" << r_start << ",step=" << step << ",levels=" << levels << ")";
  return DiscGrid(radii, std::vector<int>(radii.size(), angles), id.str());
}

DiscGrid DiscGrid::uniform(double r_max, int n_radii, int angles, bool include_origin) {
  std::vector<double> radii;
  std::vector<int> counts;
  if (include_origin) {
    radii.push_back(0.0);
    counts.push_back(1);
  }
  for (int j = 1; j <= n_radii; ++j) {
    radii.push_back(r_max * j / n_radii);
    counts.push_back(angles);
  }
  return DiscGrid(radii, counts, "uniform");
}

std::size_t DiscGrid::point_count() const {
  return std::accumulate(angles_.begin(), angles_.end(), std::size_t{0},
                         [](std::size_t acc, int n) { return acc + static_cast<std::size_t>(n); });
}

void DiscGrid::for_each_point(const std::function<void(Complex, std::size_t)>& visit) const {
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    const int n = angles_[i];
    for (int k = 0; k < n; ++k) visit(std::polar(radii_[i], 2.0 * kPi * k / n), i);
  }
}

namespace {

double checked(const std::function<double(Complex)>& h, double r, double theta) {
  const double v = h(std::polar(r, theta));
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "non-finite value on circle r = " << r << " at theta = " << theta;
    throw EvaluationError(os.str());
  }
  return v;
}

CircleMax golden(const std::function<double(Complex)>& h, double r, double lo, double hi, double tol) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = checked(h, r, x1), f2 = checked(h, r, x2);
  while (b - a > tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = checked(h, r, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = checked(h, r, x2);
    }
  }
  return f1 >= f2 ? CircleMax{f1, x1} : CircleMax{f2, x2};
}

double wrap_angle(double t) {
  t = std::fmod(t, 2.0 * kPi);
  return t < 0.0 ? t + 2.0 * kPi : t;
}

}  // namespace

CircleMax circle_max(const std::function<double(Complex)>& h, double r, int angles) {
  if (r == 0.0) return CircleMax{checked(h, 0.0, 0.0), 0.0};
  const double dt = 2.0 * kPi / angles;
  std::vector<double> vals(static_cast<std::size_t>(angles));
  for (int k = 0; k < angles; ++k) vals[k] = checked(h, r, k * dt);

  std::vector<int> order(static_cast<std::size_t>(angles));
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + std::min(3, angles), order.end(),
                    [&](int i, int j) { return vals[i] > vals[j] || (vals[i] == vals[j] && i < j); });

  CircleMax best{vals[order[0]], order[0] * dt};
  const double tol = 1e-10 * dt;
  for (int m = 0; m < std::min(3, angles); ++m) {
    const double center = order[m] * dt;
    CircleMax c = golden(h, r, center - dt, center + dt, tol);
    if (c.value > best.value) best = CircleMax{c.value, wrap_angle(c.theta)};
  }
  return best;
}

CircleMax max_modulus(const Expr& f, double r, int angles) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("max_modulus requires 0 <= r < 1");
  return circle_max([&](Complex z) { return std::abs(f.eval_raw(z)); }, r, angles);
}

Mobius mobius(Complex a) {
  if (!(std::abs(a) < 1.0)) throw DomainError("mobius requires |a| < 1");
  const Expr z = Expr::z();
  const Expr denom = Expr(1.0) - Expr(std::conj(a)) * z;
  std::vector<Complex> poles;
  if (a != Complex{}) poles.push_back(1.0 / std::conj(a));
  Expr phi = ((Expr(a) - z) / denom).with_singularities(poles);
  Expr dphi = (Expr(-(1.0 - std::norm(a))) / (denom * denom)).with_singularities(poles);
  return Mobius{phi, dphi};
}

double mobius_gap(Complex a, Complex z) {
  return (1.0 - std::norm(a)) * (1.0 - std::norm(z)) / std::norm(1.0 - std::conj(a) * z);
}

double chordal_distance(Complex u, Complex v) {
  const bool ui = !std::isfinite(std::abs(u));
  const bool vi = !std::isfinite(std::abs(v));
  if (ui && vi) return 0.0;
  if (ui) return 2.0 / std::sqrt(1.0 + std::norm(v));
  if (vi) return 2.0 / std::sqrt(1.0 + std::norm(u));
  return 2.0 * std::abs(u - v) / std::sqrt((1.0 + std::norm(u)) * (1.0 + std::norm(v)));
}

}  // namespace discode
