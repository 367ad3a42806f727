#include <doctest.h>

#include <cmath>

#include "discode/criteria.hpp"
#include "discode/gallery.hpp"
#include "discode/spaces.hpp"

using namespace discode;

namespace {
const Expr z = Expr::z();
const Expr zeroA = Expr(0.0);
Expr borderline() { return pow(1.0 - z, -2.0) / log(std::exp(1.0) / (1.0 - z)); }
}  // namespace

TEST_SUITE("criteria") {
  TEST_CASE("zero coefficient satisfies everything") {
    CHECK(check_thm1(zeroA, 0.0).verdict == Verdict::satisfied);
    CHECK(check_bz(zeroA).verdict == Verdict::satisfied);
    CHECK(check_power_bloch(zeroA, 7).verdict == Verdict::satisfied);
    CHECK(check_nehari(zeroA).verdict == Verdict::satisfied);
    CHECK(check_finite_zeros(zeroA, 0.5).verdict == Verdict::satisfied);
    CHECK(check_vmoa_integral(zeroA, 0.0).verdict == Verdict::satisfied);
    CHECK(check_loglog(zeroA).quantity == 0.0);
    CHECK(check_bmoa_integral(zeroA, {0.0}).quantity == 0.0);
  }

  TEST_CASE("bounded-solution quantity collapses for the borderline coefficient") {
    const ConditionReport r = check_thm1(borderline(), 0.5);
    CHECK(r.quantity == doctest::Approx(1.0 / (1.0 + std::log(2.0))).epsilon(1e-5));
    CHECK(r.verdict == Verdict::satisfied);
  }

  TEST_CASE("bounded-solution quantity diverges for the power family") {
    const ConditionReport r = check_thm1(gallery_get("power", {{"gamma", 2.0}}).coefficient, 0.5);
    CHECK(r.analysis.verdict == TraceVerdict::divergent);
    CHECK(r.verdict == Verdict::violated);
  }

  TEST_CASE("log-weighted sup condition") {
    const ConditionReport b = check_bz(borderline());
    CHECK(b.quantity < 1.0);
    CHECK(b.quantity > 0.95);
    CHECK(b.verdict == Verdict::inconclusive);
    // Real-axis maximum of 3 x^2 log(1/x), x = 1 - r, is 3/(2e) at x = e^(-1/2).
    const ConditionReport c = check_bz(Expr(3.0));
    CHECK(c.quantity == doctest::Approx(3.0 / (2.0 * std::exp(1.0))).epsilon(1e-4));
    CHECK(c.verdict == Verdict::satisfied);
  }

  TEST_CASE("power Bloch threshold arithmetic") {
    const Expr small = gallery_get("log_power", {{"alpha", 0.1}}).coefficient;
    const ConditionReport s = check_power_bloch(small, 1);
    CHECK(s.verdict == Verdict::satisfied);
    CHECK(s.extras.at("max_n") >= 1.0);

    const Expr a = gallery_get("log_power", {{"alpha", 0.5}}).coefficient;
    const Expr scaled = (3.0 / growth_norm(a, 1.0).value) * a;
    CHECK(check_power_bloch(scaled, 1).verdict == Verdict::satisfied);
    CHECK(check_power_bloch(scaled, 2).verdict == Verdict::violated);
    CHECK(check_power_bloch(scaled, 1).extras.at("max_n") == 1.0);
  }

  TEST_CASE("Nehari-type condition") {
    const Expr h = gallery_get("hille", {{"gamma", 1.0}}).coefficient;
    const ConditionReport v = check_nehari(h);
    CHECK(v.quantity == doctest::Approx(5.0));
    CHECK(v.verdict == Verdict::violated);
    const ConditionReport eq = check_nehari(0.2 * h);
    CHECK(eq.quantity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eq.verdict == Verdict::satisfied);
  }

  TEST_CASE("finitely many zeros condition") {
    const ConditionReport h = check_finite_zeros(gallery_get("hille", {{"gamma", 1.0}}).coefficient, 0.5);
    CHECK(h.quantity == doctest::Approx(5.0));
    CHECK(h.verdict == Verdict::violated);
    const ConditionReport l = check_finite_zeros(gallery_get("log_power", {{"alpha", 0.5}}).coefficient, 0.5);
    CHECK(l.verdict == Verdict::satisfied);
  }

  TEST_CASE("BMOA integral condition") {
    const ConditionReport one = check_bmoa_integral(Expr(1.0), {0.0});
    CHECK(one.quantity == doctest::Approx(kPi / 2.0).epsilon(1e-8));
    const ConditionReport lp =
        check_bmoa_integral(gallery_get("log_power", {{"alpha", 0.2}}).coefficient, {0.0, 0.5, 0.9, Complex{0.0, 0.9}});
    CHECK(std::isfinite(lp.quantity));
    CHECK(lp.analysis.verdict == TraceVerdict::converged);
  }

  TEST_CASE("VMOA integral condition") {
    const ConditionReport ll = check_vmoa_integral(gallery_get("loglog_power", {{"alpha", 1.0}}).coefficient, 0.0);
    CHECK(ll.analysis.verdict == TraceVerdict::converged);
    CHECK(ll.verdict == Verdict::satisfied);
    const ConditionReport pw = check_vmoa_integral(gallery_get("power", {{"gamma", 2.0}}).coefficient, 0.0);
    CHECK(pw.analysis.verdict == TraceVerdict::divergent);
  }

  TEST_CASE("log-log weighted condition") {
    CHECK(check_loglog(gallery_get("loglog_power", {{"alpha", 1.0}}).coefficient).analysis.verdict ==
          TraceVerdict::converged);
    CHECK(check_loglog(gallery_get("log_power", {{"alpha", 0.5}}).coefficient).analysis.verdict ==
          TraceVerdict::divergent);
  }

  TEST_CASE("auxiliary integral approaches 1/(4 alpha) from below") {
    CHECK(std::abs(i_alpha(1.0 - 1e-8, 1.0) - 0.25) < 0.025);
    CHECK(std::abs(i_alpha(1.0 - 1e-8, 2.0) - 0.125) < 0.0125);
    const double a = i_alpha(0.9, 1.0), b = i_alpha(0.99, 1.0), c = i_alpha(0.999, 1.0);
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < 0.25);
  }

  TEST_CASE("trace classification") {
    std::vector<TracePoint> flat{{1, 1.0, 0.1}, {2, 1.0, 0.01}, {3, 1.0, 0.001}};
    CHECK(analyze_trace(flat).verdict == TraceVerdict::converged);
    std::vector<TracePoint> up{{1, 1.0, 0.1}, {2, 2.0, 0.01}, {3, 4.0, 0.001}, {4, 8.0, 1e-4}};
    CHECK(analyze_trace(up).verdict == TraceVerdict::divergent);
  }
}
