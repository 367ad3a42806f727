#pragma once

#include <optional>
#include <string>
#include <vector>

#include "discode/expr.hpp"

namespace discode {

enum class TraceVerdict { converged, divergent, inconclusive };

const char* to_string(TraceVerdict v);

/// One refinement level: cumulative grid size, the running value, and the
/// boundary gap 1 - r of the deepest circle included so far.
struct TracePoint {
  double n = 0.0;
  double value = 0.0;
  double gap = 1.0;
};

/// Classification of a refinement trace.
///
/// Rules, applied in order:
///  1. last two values agree to `tol` relatively            -> converged;
///  2. each of the last three values grows by >= 5%          -> divergent;
///  3. the increments, as a density in L = log(e/gap), are fitted to a power
///     L^p over the last (up to) eight levels: p <= -1.5 is a summable tail
///     (converged, with the fitted tail added to `extrapolated`), p >= -1.15
///     is a non-summable tail (divergent), anything between is inconclusive.
struct TraceAnalysis {
  TraceVerdict verdict = TraceVerdict::inconclusive;
  double tail_exponent = 0.0;
  double extrapolated = 0.0;
};

inline constexpr double kTraceTolerance = 1e-6;

TraceAnalysis analyze_trace(const std::vector<TracePoint>& trace, double tol = kTraceTolerance);

/// A sup- or integral-type quantity with its refinement diagnostics.
struct NormEstimate {
  std::string kind;
  double value = 0.0;
  std::optional<Complex> argmax;
  std::string grid;
  std::vector<TracePoint> trace;
  bool converged = false;
  bool divergent = false;
  double extrapolated = 0.0;
  double tail_exponent = 0.0;

  /// Fills converged / divergent / extrapolated from the trace.
  void classify(double tol = kTraceTolerance);
};

/// Least-squares slope of log(value) against log(1/gap) over the last `points` trace levels.
double trace_growth_exponent(const std::vector<TracePoint>& trace, int points = 8);

}  // namespace discode
