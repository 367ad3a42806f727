#include "discode/valence.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>

#include "discode/disc.hpp"
#include "discode/errors.hpp"
#include "discode/parallel.hpp"
#include "discode/spaces.hpp"

namespace discode {

namespace {

constexpr double kContourClearance = 1e-8;
constexpr double kCountTolerance = 1e-3;
constexpr double kCountReject = 0.25;
constexpr int kCountStartNodes = 2048;
constexpr int kCountMaxNodes = 1 << 22;

// Sum of z f'(z) / (f(z) - zeta) over the nodes k = first, first + stride, ... < n.
Complex contour_sum(const Expr& f, const Expr& df, Complex zeta, double r, int n, int first, int stride) {
  const int count = (n - first + stride - 1) / stride;
  std::vector<Complex> terms(static_cast<std::size_t>(count));
  parallel_for(terms.size(), [&](std::size_t i) {
    const int k = first + static_cast<int>(i) * stride;
    const Complex z = std::polar(r, 2.0 * kPi * k / n);
    const Complex w = f.eval_raw(z) - zeta;
    if (!(std::abs(w) >= kContourClearance)) {
      std::ostringstream os;
      os << "f - zeta vanishes (|f - zeta| < 1e-8) on the contour |z| = " << r << " near z = " << z;
      throw DomainError(os.str());
    }
    terms[i] = z * df.eval_raw(z) / w;
  });
  Complex acc = 0.0;
  for (const Complex& t : terms) acc += t;
  return acc;
}

double rounding_residual(double x) { return std::abs(x - std::round(x)); }

}  // namespace

CountResult count_preimages(const Expr& f, Complex zeta, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("count_preimages requires 0 < r < 1");
  const Expr df = diff(f);
  int n = kCountStartNodes;
  Complex sum = contour_sum(f, df, zeta, r, n, 0, 1);
  double prev = std::numeric_limits<double>::quiet_NaN();
  while (true) {
    const double value = (sum / static_cast<double>(n)).real();
    const double res = rounding_residual(value);
    if (!std::isfinite(value)) throw EvaluationError("count_preimages: non-finite contour integral");
    const bool agree = std::isfinite(prev) && std::abs(value - prev) < kCountTolerance;
    if ((res < kCountTolerance && agree) || n >= kCountMaxNodes) {
      if (res > kCountReject) {
        std::ostringstream os;
        os << "count_preimages: contour integral " << value << " is not close to an integer";
        throw ConvergenceError(os.str());
      }
      return CountResult{zeta, r, static_cast<int>(std::lround(value)), res, n};
    }
    prev = value;
    sum += contour_sum(f, df, zeta, r, 2 * n, 1, 2);
    n *= 2;
  }
}

double valence_integral(const Expr& f, Complex zeta0, double r_inner) {
  if (!(r_inner > 0.0 && r_inner < 1.0)) throw DomainError("valence_integral requires 0 < r_inner < 1");
  const Expr df = diff(f);
  auto h = [&](Complex z, double) {
    const Complex w = f.eval_raw(z);
    if (!(std::abs(w - zeta0) < 1.0)) return 0.0;
    return std::norm(df.eval_raw(z));
  };
  std::vector<double> breaks{0.0};
  if (f.singularities()) {
    for (const Complex& s : *f.singularities()) breaks.push_back(std::arg(s));
  }
  return polar_area_integral(h, {r_inner}, breaks, 1e-6, PolarRule::adaptive).back();
}

ValenceSup valence_sup(const Expr& f, double r_inner, double spacing) {
  if (!(spacing > 0.0)) throw DomainError("valence_sup requires a positive spacing");
  std::vector<Complex> image;
  DiscGrid::uniform(r_inner, 32, 128).for_each_point([&](Complex z, std::size_t) {
    const Complex w = f.eval_raw(z);
    if (std::isfinite(w.real()) && std::isfinite(w.imag())) image.push_back(w);
  });
  if (image.empty()) throw EvaluationError("valence_sup: f is not finite on the sample grid");
  double x0 = image[0].real(), x1 = x0, y0 = image[0].imag(), y1 = y0;
  for (const Complex& w : image) {
    x0 = std::min(x0, w.real());
    x1 = std::max(x1, w.real());
    y0 = std::min(y0, w.imag());
    y1 = std::max(y1, w.imag());
  }
  x0 -= 2.0, x1 += 2.0, y0 -= 2.0, y1 += 2.0;
  ValenceSup out;
  for (double y = y0; y <= y1; y += spacing) {
    for (double x = x0; x <= x1; x += spacing) {
      const Complex c(x, y);
      // Discs missing every image sample contribute nothing.
      const bool near = std::any_of(image.begin(), image.end(),
                                    [&](Complex w) { return std::abs(w - c) < 1.0 + spacing; });
      if (near) out.grid.push_back(c);
    }
  }
  std::vector<double> values(out.grid.size());
  for (std::size_t i = 0; i < out.grid.size(); ++i) values[i] = valence_integral(f, out.grid[i], r_inner);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > out.value) {
      out.value = values[i];
      out.zeta = out.grid[i];
    }
  }
  return out;
}

std::vector<double> hille_zeros(double gamma, int n_lo, int n_hi) {
  if (!(gamma > 0.0)) throw DomainError("hille_zeros requires gamma > 0");
  std::vector<double> out;
  // (e^{x} - 1) / (e^{x} + 1) = tanh(x / 2).
  for (int n = n_lo; n <= n_hi; ++n) out.push_back(std::tanh(kPi * n / (2.0 * gamma)));
  return out;
}

std::vector<double> find_zeros_on_segment(const Expr& f, double a, double b, int samples) {
  if (!(a < b && a > -1.0 && b < 1.0)) throw DomainError("find_zeros_on_segment requires -1 < a < b < 1");
  if (samples < 2) throw DomainError("find_zeros_on_segment requires at least 2 samples");
  const Expr df = diff(f);
  auto re = [&](double x) { return f(Complex(x, 0.0)).real(); };

  const double s0 = std::atanh(a), s1 = std::atanh(b);
  std::vector<double> xs(static_cast<std::size_t>(samples) + 1), vs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = i == 0 ? a : (i + 1 == xs.size() ? b : std::tanh(s0 + (s1 - s0) * static_cast<double>(i) / samples));
    vs[i] = re(xs[i]);
  }

  std::vector<double> zeros;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (vs[i] == 0.0) {
      zeros.push_back(xs[i]);
      continue;
    }
    if (i + 1 == xs.size() || vs[i + 1] == 0.0 || (vs[i] > 0.0) == (vs[i + 1] > 0.0)) continue;
    boost::uintmax_t iters = 200;
    auto bracket = boost::math::tools::toms748_solve(
        re, xs[i], xs[i + 1], vs[i], vs[i + 1], boost::math::tools::eps_tolerance<double>(52), iters);
    double x = 0.5 * (bracket.first + bracket.second);
    for (int k = 0; k < 4; ++k) {
      const double d = df(Complex(x, 0.0)).real();
      if (d == 0.0) break;
      const double nx = x - re(x) / d;
      if (!(nx > xs[i] - (xs[i + 1] - xs[i]) && nx < xs[i + 1] + (xs[i + 1] - xs[i]))) break;
      x = nx;
    }
    const double slope = std::abs(df(Complex(x, 0.0)));
    if (!(std::abs(re(x)) <= 1e-10 * std::max(slope, 1e-300) + 1e-300)) {
      std::ostringstream os;
      os << "find_zeros_on_segment: residual too large at x = " << x;
      throw ConvergenceError(os.str());
    }
    zeros.push_back(x);
  }
  std::sort(zeros.begin(), zeros.end());
  zeros.erase(std::unique(zeros.begin(), zeros.end(), [](double p, double q) { return std::abs(p - q) < 1e-13; }),
              zeros.end());
  return zeros;
}

}  // namespace discode
