// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "discode/criteria.hpp"
#include "discode/gallery.hpp"
#include "discode/inverse.hpp"
#include "discode/json_io.hpp"
#include "discode/ode.hpp"
#include "discode/parallel.hpp"
#include "discode/spaces.hpp"
#include "discode/valence.hpp"

using namespace discode;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

const std::vector<GalleryEntry>& five_families() {
  static const std::vector<GalleryEntry> e{
      gallery_get("hille", {{"gamma", 1.0}}),       gallery_get("power", {{"gamma", 2.0}}),
      gallery_get("exp_singular"),                  gallery_get("log_power", {{"alpha", 0.5}}),
      gallery_get("loglog_power", {{"alpha", 1.0}}),
  };
  return e;
}

Outcome gallery_residuals() {
  const auto t0 = std::chrono::steady_clock::now();
  const DiscGrid grid = DiscGrid::uniform(0.9, 16, 64, false);
  double worst = 0.0;
  for (const GalleryEntry& e : five_families()) {
    for (const Expr& f : e.solutions) worst = std::max(worst, residual(f, e.coefficient, grid));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-9 && secs < 5.0,
          "max residual " + num(worst) + " on " + std::to_string(grid.point_count()) + " points, " + num(secs) + " s"};
}

Outcome solver_oracle() {
  const GalleryEntry e = gallery_get("power", {{"gamma", 2.0}});
  const Expr& f1 = e.solutions[0];
  const ODEProblem p{e.coefficient, 1.0, 2.0};
  const TaylorPatch patch = taylor_solve(p, 64);
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Complex z = std::polar(0.5, 2.0 * kPi * k / 16.0);
    worst = std::max(worst, rel(patch.value(z), f1(z)));
  }
  const RaySolution ray = continue_along_ray(p, kPi / 4.0, 0.999);
  for (double r : {0.1, 0.5, 0.9, 0.99, 0.995, 0.999}) worst = std::max(worst, rel(ray.value(r), f1(ray.point(r))));
  return {worst <= 1e-7, "max rel. err " + num(worst)};
}

Outcome hille_zero_check() {
  const Expr f = gallery_get("hille", {{"gamma", 1.0}}).solutions[0];
  const std::vector<double> found = find_zeros_on_segment(f, 0.01, 1.0 - 1e-7);
  const std::vector<double> want = hille_zeros(1.0, 1, 5);
  if (found.size() < 5) return {false, "found only " + std::to_string(found.size()) + " zeros"};
  double worst = 0.0;
  for (int n = 0; n < 5; ++n) worst = std::max(worst, std::abs(found[n] - want[n]));
  const std::vector<double> z = hille_zeros(1.0, 3, 4);
  const CountResult c = count_preimages(f, 0.0, 0.5 * (z[0] + z[1]));
  return {worst <= 1e-10 && c.count == 7,
          "max |z_n error| " + num(worst) + ", count " + std::to_string(c.count) + " (residual " + num(c.residual) + ")"};
}

Outcome i_alpha_limit() {
  bool ok = true;
  std::string detail;
  for (double a : {0.5, 1.0, 2.0}) {
    const double target = 1.0 / (4.0 * a);
    const double v4 = i_alpha(1.0 - 1e-4, a), v6 = i_alpha(1.0 - 1e-6, a), v8 = i_alpha(1.0 - 1e-8, a);
    const bool approach = std::abs(v6 - target) < std::abs(v4 - target) && std::abs(v8 - target) < std::abs(v6 - target);
    const bool within = std::abs(v8 - target) <= 0.1 * target;
    ok = ok && approach && within;
    detail += "alpha=" + num(a) + ": " + num(v4) + ", " + num(v6) + ", " + num(v8) + " vs " + num(target) + "; ";
  }
  return {ok, detail};
}

Expr borderline_coefficient() {
  const Expr z = Expr::z();
  return (pow(1.0 - z, -2.0) / (1.0 - log(1.0 - z))).with_singularities({1.0});
}

Outcome dichotomy() {
  const Expr A = borderline_coefficient();
  const ConditionReport bz = check_bz(A);
  const ConditionReport t1 = check_thm1(A, 0.5);
  const double target = 1.0 / (1.0 + std::log(2.0));
  const bool bz_ok = bz.quantity >= 0.99 && bz.quantity <= 1.0;
  const bool t1_ok = std::abs(t1.quantity - target) <= 0.01 * target;
  return {bz_ok && t1_ok, "bz quantity " + num(bz.quantity) + " (" + to_string(bz.verdict) + "), thm1 quantity " +
                              num(t1.quantity) + " vs " + num(target)};
}

Outcome growth_norms() {
  const NormEstimate h = growth_norm(gallery_get("hille", {{"gamma", 1.0}}).coefficient, 0.0);
  const NormEstimate p = growth_norm(gallery_get("power", {{"gamma", 2.0}}).coefficient, 0.0);
  return {std::abs(h.value - 5.0) <= 1e-6 && std::abs(p.value - 3.0) <= 1e-6,
          "hille(1): " + num(h.value) + ", power(2): " + num(p.value)};
}

Outcome bloch_dichotomy() {
  const GalleryEntry h = gallery_get("hille", {{"gamma", 1.0}});
  const GalleryEntry p = gallery_get("power", {{"gamma", 3.0}});
  const NormEstimate bh = bb_product(h.solutions[0], h.coefficient);
  const NormEstimate bp = bb_product(p.solutions[0], p.coefficient);
  const double rate = trace_growth_exponent(bp.trace);
  return {bh.converged && bp.divergent && std::abs(rate - 1.0) <= 0.1,
          "hille(1) " + std::string(bh.converged ? "converged" : "not converged") + " at " + num(bh.value) +
              ", power(3) " + (bp.divergent ? "divergent" : "not divergent") + " with rate " + num(rate)};
}

Outcome converse() {
  const GalleryEntry e = gallery_get("power", {{"gamma", 2.0}});
  const SolutionPair n = normalize_pair(make_solution_pair(e.solutions[0], e.solutions[1]));
  const Expr A = coefficient_from_pair(n);
  const Expr S = schwarzian(n.f1 / n.f2);
  double worst_a = 0.0, worst_s = 0.0;
  DiscGrid::uniform(0.9, 16, 64, false).for_each_point([&](Complex z, std::size_t) {
    const Complex want = e.coefficient(z);
    worst_a = std::max(worst_a, rel(A(z), want));
    worst_s = std::max(worst_s, rel(S(z), 2.0 * want));
  });
  return {worst_a <= 1e-9 && worst_s <= 1e-8, "coefficient rel. err " + num(worst_a) + ", Schwarzian rel. err " +
                                                   num(worst_s)};
}

Outcome gronwall_domination() {
  std::vector<GalleryEntry> entries = five_families();
  entries.push_back(gallery_get("zero"));
  entries.push_back(gallery_get("constant", {{"c", 1.0}}));
  double worst = 0.0;
  int checks = 0;
  for (const GalleryEntry& e : entries) {
    for (const Expr& f : e.solutions) {
      const ODEProblem p{e.coefficient, f(0.0), diff(f)(0.0)};
      for (double theta : {kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0}) {
        for (double r : {0.9, 0.99, 0.999}) {
          const double bound = gronwall_bound(p, theta, 0.5, r);
          worst = std::max(worst, std::abs(f(std::polar(r, theta))) / bound);
          ++checks;
        }
      }
    }
  }
  return {worst <= 1.0, std::to_string(checks) + " checks, max |f| / bound = " + num(worst)};
}

Outcome dirichlet_profile() {
  const GalleryEntry e = gallery_get("log_power", {{"alpha", 0.25}});
  const double beta = std::max(1.0, growth_norm(e.coefficient, 1.0).value);
  const DirichletResult d = weighted_dirichlet(e.solutions[0], beta, 1.0 - 1e-8);
  // increments[i] is the increment into depth 1 - 10^{-(i + 2)}.
  bool decreasing = true;
  std::string list;
  for (int k = 4; k <= 8; ++k) {
    list += num(d.increments[k - 2]) + " ";
    if (k > 4 && !(d.increments[k - 2] < d.increments[k - 3])) decreasing = false;
  }
  const double last = d.increments[6];
  return {decreasing && last <= 1e-4 * d.value,
          "beta " + num(beta) + ", increments k=4..8: " + list + "total " + num(d.value) + ", last/total " +
              num(last / d.value)};
}

Outcome vmoa_route() {
  const GalleryEntry e = gallery_get("loglog_power", {{"alpha", 1.0}});
  const Expr& f = e.solutions[0];
  const ConditionReport ll = check_loglog(e.coefficient);
  const ConditionReport vm = check_vmoa_integral(e.coefficient, 0.0);
  const double m9 = max_modulus(f, 0.9).value, m8 = max_modulus(f, 1.0 - 1e-8).value;
  std::vector<double> radii;
  for (int j = 1; j <= 6; ++j) radii.push_back(1.0 - std::pow(10.0, -j));
  const std::vector<ProfilePoint> prof = vmoa_profile(f, radii);
  bool decreasing = true;
  std::string list;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    list += num(prof[i].value) + " ";
    if (i > 0 && !(prof[i].value < prof[i - 1].value)) decreasing = false;
  }
  const bool ok = ll.analysis.verdict == TraceVerdict::converged && vm.analysis.verdict == TraceVerdict::converged &&
                  m8 > m9 + 1.0 && decreasing;
  return {ok, "loglog " + num(ll.quantity) + " (" + to_string(ll.analysis.verdict) + "), vmoa integral " +
                  num(vm.quantity) + " (" + to_string(vm.analysis.verdict) + "), M(0.9) " + num(m9) + ", M(1-1e-8) " +
                  num(m8) + ", profile " + list};
}

std::string suite_json() {
  const GalleryEntry h = gallery_get("hille", {{"gamma", 1.0}});
  const GalleryEntry p = gallery_get("power", {{"gamma", 2.0}});
  const GalleryEntry l = gallery_get("log_power", {{"alpha", 0.5}});
  Json j;
  j["schema"] = kJsonSchema;
  j["growth"] = to_json(growth_norm(h.coefficient, 0.0));
  j["bloch"] = to_json(bloch_seminorm(p.solutions[0]));
  j["thm1"] = to_json(check_thm1(l.coefficient, 0.5));
  j["vmoa"] = to_json(check_vmoa_integral(l.coefficient, 0.5));
  j["bmoa"] = to_json(bmoa_norm(l.solutions[0], {0.0, 0.5, Complex(0.0, 0.9)}));
  j["count"] = to_json(count_preimages(h.solutions[0], 0.0, 0.99));
  j["dirichlet"] = weighted_dirichlet(l.solutions[0], 1.0, 1.0 - 1e-6).cumulative;
  return dump(j);
}

Outcome determinism() {
  set_thread_count(1);
  const std::string a = suite_json();
  const std::string b = suite_json();
  set_thread_count(3);
  const std::string c = suite_json();
  set_thread_count(1);
  return {a == b && a == c, "JSON bytes " + std::to_string(a.size()) + ", repeat identical: " + (a == b ? "yes" : "no") +
                                ", 3 threads identical: " + (a == c ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gallery residual suite", gallery_residuals},
      {"solver oracle", solver_oracle},
      {"Hille zeros", hille_zero_check},
      {"I_alpha limit", i_alpha_limit},
      {"bz / thm1 dichotomy", dichotomy},
      {"growth norms", growth_norms},
      {"Bloch dichotomy", bloch_dichotomy},
      {"converse identities", converse},
      {"Gronwall domination", gronwall_domination},
      {"weighted Dirichlet profile", dirichlet_profile},
      {"VMOA route", vmoa_route},
      {"determinism", determinism},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.passed) ++failures;
    std::printf("%s criterion %zu (%s): %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s total runtime %.1f s (limit 300 s)\n", total <= 300.0 ? "PASS" : "FAIL", total);
  if (total > 300.0) ++failures;
  return failures == 0 ? 0 : 1;
}
