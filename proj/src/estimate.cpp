#include "discode/estimate.hpp"

#include <algorithm>
#include <cmath>

namespace discode {

const char* to_string(TraceVerdict v) {
  switch (v) {
    case TraceVerdict::converged: return "converged";
    case TraceVerdict::divergent: return "divergent";
    case TraceVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

double log_weight(double gap) { return 1.0 - std::log(gap); }

// Ordinary least squares slope of y on x.
double slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  return den == 0.0 ? 0.0 : (n * sxy - sx * sy) / den;
}

}  // namespace

TraceAnalysis analyze_trace(const std::vector<TracePoint>& trace, double tol) {
  TraceAnalysis out;
  if (trace.empty()) return out;
  const double last = trace.back().value;
  out.extrapolated = last;
  if (trace.size() < 2) return out;

  const double prev = trace[trace.size() - 2].value;
  if (std::abs(last - prev) <= tol * std::max(std::abs(last), std::abs(prev)) || (last == 0.0 && prev == 0.0)) {
    out.verdict = TraceVerdict::converged;
    return out;
  }

  if (trace.size() >= 4) {
    bool growing = true;
    for (std::size_t i = trace.size() - 3; i < trace.size(); ++i) {
      const double a = trace[i - 1].value, b = trace[i].value;
      if (!(a > 0.0 && b >= 1.05 * a)) growing = false;
    }
    if (growing) {
      out.verdict = TraceVerdict::divergent;
      out.extrapolated = INFINITY;
      return out;
    }
  }

  // Increment density fit over the tail.
  std::vector<double> lx, ly;
  const std::size_t first = trace.size() > 9 ? trace.size() - 9 : 1;
  for (std::size_t i = std::max<std::size_t>(first, 1); i < trace.size(); ++i) {
    const double dv = trace[i].value - trace[i - 1].value;
    const double l0 = log_weight(trace[i - 1].gap), l1 = log_weight(trace[i].gap);
    if (!(dv > 0.0) || !(l1 > l0)) continue;
    lx.push_back(std::log(0.5 * (l0 + l1)));
    ly.push_back(std::log(dv / (l1 - l0)));
  }
  if (lx.size() < 3) return out;
  const double p = slope(lx, ly);
  out.tail_exponent = p;
  if (p <= -1.5) {
    out.verdict = TraceVerdict::converged;
    // Tail of the fitted density c L^p beyond the last level.
    const double l_last = log_weight(trace.back().gap);
    const double l_prev = log_weight(trace[trace.size() - 2].gap);
    const double density = (last - prev) / (l_last - l_prev);
    const double l_mid = 0.5 * (l_last + l_prev);
    const double c = density / std::pow(l_mid, p);
    out.extrapolated = last + c * std::pow(l_last, p + 1.0) / (-(p + 1.0));
  } else if (p >= -1.15) {
    out.verdict = TraceVerdict::divergent;
    out.extrapolated = INFINITY;
  }
  return out;
}

void NormEstimate::classify(double tol) {
  const TraceAnalysis a = analyze_trace(trace, tol);
  converged = a.verdict == TraceVerdict::converged;
  divergent = a.verdict == TraceVerdict::divergent;
  extrapolated = a.extrapolated;
  tail_exponent = a.tail_exponent;
}

double trace_growth_exponent(const std::vector<TracePoint>& trace, int points) {
  std::vector<double> x, y;
  const std::size_t n = trace.size();
  const std::size_t start = n > static_cast<std::size_t>(points) ? n - points : 0;
  for (std::size_t i = start; i < n; ++i) {
    if (!(trace[i].value > 0.0)) continue;
    x.push_back(-std::log(trace[i].gap));
    y.push_back(std::log(trace[i].value));
  }
  return x.size() < 2 ? 0.0 : slope(x, y);
}

}  // namespace discode
