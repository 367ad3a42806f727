#include "discode/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace discode {

namespace {

template <class V>
struct SimpsonState {
  const std::function<V(double)>& f;
  double target;
  int max_depth;
  long evaluations = 0;
  bool converged = true;
  double error = 0.0;

  V eval(double x) {
    ++evaluations;
    return f(x);
  }

  V recurse(double a, double b, V fa, V fm, V fb, V whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const V flm = eval(lm), frm = eval(rm);
    const double h = (b - a) / 12.0;
    const V left = h * (fa + 4.0 * flm + fm);
    const V right = h * (fm + 4.0 * frm + fb);
    const V delta = left + right - whole;
    const double err = std::abs(delta);
    if (err <= 15.0 * tol || depth >= max_depth || !(b - a > 0.0) || m == a || m == b) {
      if (depth >= max_depth && err > 15.0 * tol) converged = false;
      error += err / 15.0;
      return left + right + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

template <class V>
V run_simpson(const std::function<V(double)>& f, double a, double b, QuadratureTolerance tol, long& evals,
              bool& converged, double& error) {
  if (a == b) return V{};
  SimpsonState<V> st{f, 0.0, tol.max_depth};
  // Eight-panel pre-estimate sets the relative scale.
  constexpr int kPanels = 8;
  std::vector<V> nodes(2 * kPanels + 1);
  for (int i = 0; i <= 2 * kPanels; ++i) nodes[i] = st.eval(a + (b - a) * i / (2.0 * kPanels));
  const double panel = (b - a) / kPanels;
  V rough{};
  for (int p = 0; p < kPanels; ++p) {
    rough += panel / 6.0 * (nodes[2 * p] + 4.0 * nodes[2 * p + 1] + nodes[2 * p + 2]);
  }
  const double target = std::max(tol.abs, tol.rel * std::abs(rough));
  V total{};
  for (int p = 0; p < kPanels; ++p) {
    const double pa = a + p * panel, pb = pa + panel;
    const V whole = panel / 6.0 * (nodes[2 * p] + 4.0 * nodes[2 * p + 1] + nodes[2 * p + 2]);
    total += st.recurse(pa, pb, nodes[2 * p], nodes[2 * p + 1], nodes[2 * p + 2], whole, target / kPanels, 1);
  }
  evals = st.evaluations;
  converged = st.converged;
  error = st.error;
  return total;
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  QuadratureTolerance tol) {
  QuadratureResult r;
  r.value = run_simpson<double>(f, a, b, tol, r.evaluations, r.converged, r.error);
  return r;
}

ComplexQuadratureResult adaptive_simpson_complex(const std::function<Complex(double)>& f, double a, double b,
                                                 QuadratureTolerance tol) {
  ComplexQuadratureResult r;
  long evals = 0;
  r.value = run_simpson<Complex>(f, a, b, tol, evals, r.converged, r.error);
  return r;
}

QuadratureResult integrate_toward_boundary(const std::function<double(double, double)>& g, double t0, double t1,
                                           QuadratureTolerance tol) {
  const double u0 = to_log_gap(t0), u1 = to_log_gap(t1);
  return adaptive_simpson(
      [&](double u) {
        const double gap = std::exp(-u);
        return g(from_log_gap(u), gap) * gap;
      },
      u0, u1, tol);
}

NestedResult nested_toward_boundary(const std::function<double(double, double)>& inner,
                                    const std::function<double(double, double, double)>& outer, double t0,
                                    const std::vector<double>& boundaries, QuadratureTolerance tol) {
  NestedResult res;
  res.boundaries = boundaries;
  double g_start = 0.0, acc = 0.0, prev = t0;
  auto inner_u = [&](double u) {
    const double gap = std::exp(-u);
    return inner(from_log_gap(u), gap) * gap;
  };
  for (double b : boundaries) {
    const double ua = to_log_gap(prev), ub = to_log_gap(b);
    const double g0 = g_start;
    QuadratureTolerance piece{1e-14 * std::abs(g0) + 1e-300, 1e-12, tol.max_depth};
    auto outer_u = [&](double u) {
      const double gap = std::exp(-u);
      QuadratureResult gi = adaptive_simpson(inner_u, ua, u, piece);
      if (!gi.converged) res.converged = false;
      return outer(from_log_gap(u), gap, g0 + gi.value) * gap;
    };
    QuadratureResult po = adaptive_simpson(outer_u, ua, ub, tol);
    QuadratureResult pi = adaptive_simpson(inner_u, ua, ub, piece);
    if (!po.converged || !pi.converged) res.converged = false;
    acc += po.value;
    g_start = g0 + pi.value;
    res.inner_cumulative.push_back(g_start);
    res.outer_cumulative.push_back(acc);
    prev = b;
  }
  return res;
}

QuadratureResult gauss_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol,
                               int max_depth) {
  QuadratureResult r;
  if (a == b) return r;
  double err = 0.0, l1 = 0.0;
  r.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol, &err, &l1);
  r.error = err;
  r.converged = err <= std::max(rel_tol * l1, 1e-300) * 10.0;
  return r;
}

QuadratureResult gauss_kronrod_split(const std::function<double(double)>& f, std::vector<double> breakpoints,
                                     double rel_tol, int max_depth) {
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    QuadratureResult p = gauss_kronrod(f, breakpoints[i], breakpoints[i + 1], rel_tol, max_depth);
    total.value += p.value;
    total.error += p.error;
    total.converged = total.converged && p.converged;
  }
  return total;
}

Complex periodic_trapezoid(const std::function<Complex(double)>& h, int n) {
  Complex acc = 0.0;
  for (int k = 0; k < n; ++k) acc += h(2.0 * 3.141592653589793238462643383279502884 * k / n);
  return acc / static_cast<double>(n);
}

}  // namespace discode
