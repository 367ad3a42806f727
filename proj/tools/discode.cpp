#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "discode/criteria.hpp"
#include "discode/errors.hpp"
#include "discode/gallery.hpp"
#include "discode/inverse.hpp"
#include "discode/json_io.hpp"
#include "discode/ode.hpp"
#include "discode/parallel.hpp"
#include "discode/parser.hpp"
#include "discode/spaces.hpp"
#include "discode/valence.hpp"

using namespace discode;

namespace {

struct RunConfig {
  int depth = 40;
  int angles = kDefaultAngles;
  double tol = 1e-10;
  std::string format = "json";
  unsigned long long seed = 0;
  int threads = 1;

  SupGrid sup() const { return SupGrid{depth, 0.25, angles}; }
};

std::string shortest(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

void emit(const Json& body) {
  Json j;
  j["schema"] = kJsonSchema;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  std::cout << dump(j) << "\n";
}

void emit_trace_csv(const std::vector<TracePoint>& trace) {
  std::cout << "n,value,gap\n";
  for (const TracePoint& p : trace) std::cout << shortest(p.n) << "," << shortest(p.value) << "," << shortest(p.gap) << "\n";
}

Complex parse_constant(const std::string& text) {
  const Expr e = parse_expression(text);
  if (!e.is_constant()) throw ParseError("expected a constant, got '" + text + "'");
  return e.node().value;
}

GalleryParams parse_params(const std::vector<std::string>& items) {
  GalleryParams out;
  for (const std::string& item : items) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("parameter '" + item + "' must look like name=value");
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("parameter '" + item + "' has a non-numeric value");
    }
  }
  return out;
}

// ---- norm ----------------------------------------------------------------

struct NormArgs {
  std::string func, coef, space;
  double r = 0.9, p = 2.0, alpha = 1.0, beta = 1.0, depth_r = 1.0 - 1e-8;
};

void run_norm(const RunConfig& cfg, const NormArgs& a) {
  const Expr f = parse_expression(a.func);
  const std::string& s = a.space;
  NormEstimate est;
  Json extra;
  if (s.size() > 1 && s[0] == 'l' && (std::isdigit(static_cast<unsigned char>(s[1])) || s[1] == '.')) {
    est = growth_norm(f, std::stod(s.substr(1)), cfg.sup());
  } else if (s == "bloch") {
    est = bloch_seminorm(f, cfg.sup());
  } else if (s == "bb") {
    if (a.coef.empty()) throw ParseError("--space bb needs --coef");
    est = bb_product(f, parse_expression(a.coef), cfg.sup());
  } else if (s == "spherical") {
    est = spherical_seminorm(f, cfg.sup());
  } else if (s == "logratio") {
    est = log_growth_ratio(f, a.alpha, cfg.sup());
  } else if (s == "bmoa") {
    est = bmoa_norm(f, default_bmoa_grid(), std::max(cfg.tol, 1e-12));
  } else if (s == "vmoa") {
    std::vector<double> radii;
    for (int j = 1; j <= 6; ++j) radii.push_back(1.0 - std::pow(10.0, -j));
    Json prof = Json::array();
    for (const ProfilePoint& pt : vmoa_profile(f, radii, 16, std::max(cfg.tol, 1e-12))) {
      prof.push_back(Json::array({pt.radius, pt.value}));
    }
    if (cfg.format == "csv") {
      std::cout << "radius,value\n";
      for (const auto& row : prof) std::cout << shortest(row[0].get<double>()) << "," << shortest(row[1].get<double>()) << "\n";
      return;
    }
    emit(Json{{"kind", "vmoa_profile"}, {"profile", prof}});
    return;
  } else if (s == "hardy" || s == "nevanlinna" || s == "maxmod") {
    Json out{{"kind", s}, {"r", a.r}};
    if (s == "hardy") {
      out["p"] = a.p;
      out["value"] = hardy_mean(f, a.p, a.r);
    } else if (s == "nevanlinna") {
      out["value"] = proximity(f, a.r);
    } else {
      const CircleMax m = max_modulus(f, a.r, cfg.angles);
      out["value"] = m.value;
      out["theta"] = m.theta;
    }
    if (cfg.format == "csv") {
      std::cout << "kind,r,value\n" << s << "," << shortest(a.r) << "," << shortest(out["value"].get<double>()) << "\n";
      return;
    }
    emit(out);
    return;
  } else if (s == "dirichlet") {
    const DirichletResult d = weighted_dirichlet(f, a.beta, a.depth_r);
    if (cfg.format == "csv") {
      std::cout << "depth_index,cumulative\n";
      for (std::size_t i = 0; i < d.cumulative.size(); ++i) std::cout << i + 1 << "," << shortest(d.cumulative[i]) << "\n";
      return;
    }
    emit(Json{{"kind", "weighted_dirichlet"},
              {"beta", a.beta},
              {"depth", a.depth_r},
              {"value", d.value},
              {"cumulative", d.cumulative},
              {"increments", d.increments}});
    return;
  } else {
    throw ParseError("unknown space '" + s + "'");
  }
  if (cfg.format == "csv") {
    emit_trace_csv(est.trace);
    return;
  }
  emit(to_json(est));
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string coef, criterion;
  double r0 = 0.0, R = 0.5, r = 0.9, alpha = 1.0;
  int n = 1;
};

void run_check(const RunConfig& cfg, const CheckArgs& a) {
  if (a.criterion == "i_alpha") {
    const double v = i_alpha(a.r, a.alpha);
    if (cfg.format == "csv") {
      std::cout << "r,alpha,value\n" << shortest(a.r) << "," << shortest(a.alpha) << "," << shortest(v) << "\n";
      return;
    }
    emit(Json{{"criterion", "i_alpha"}, {"r", a.r}, {"alpha", a.alpha}, {"value", v}, {"limit", 1.0 / (4.0 * a.alpha)}});
    return;
  }
  if (a.coef.empty()) throw ParseError("--coef is required for criterion " + a.criterion);
  const Expr A = parse_expression(a.coef);
  ConditionReport rep;
  const std::string& c = a.criterion;
  if (c == "thm1") {
    rep = check_thm1(A, a.r0);
  } else if (c == "bz") {
    rep = check_bz(A, cfg.sup());
  } else if (c == "power_bloch") {
    rep = check_power_bloch(A, a.n, cfg.sup());
  } else if (c == "nehari") {
    rep = check_nehari(A, cfg.sup());
  } else if (c == "finite_zeros") {
    rep = check_finite_zeros(A, a.R, cfg.sup());
  } else if (c == "bmoa_integral") {
    rep = check_bmoa_integral(A, default_bmoa_grid());
  } else if (c == "vmoa_integral") {
    rep = check_vmoa_integral(A, a.r0);
  } else if (c == "loglog") {
    rep = check_loglog(A, cfg.sup());
  } else {
    throw ParseError("unknown criterion '" + c + "'");
  }
  if (cfg.format == "csv") {
    emit_trace_csv(rep.trace);
    return;
  }
  emit(to_json(rep));
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string coef, f0 = "1", fp0 = "0", out;
  double ray = kPi / 2.0, rmax = 0.9, r0 = 0.0;
  int points = 20;
};

void run_solve(const RunConfig& cfg, const SolveArgs& a) {
  const ODEProblem p{parse_expression(a.coef), parse_constant(a.f0), parse_constant(a.fp0)};
  if (!(a.r0 >= 0.0 && a.r0 < a.rmax)) throw DomainError("solve requires 0 <= r0 < rmax");
  if (a.points < 1) throw ParseError("--points must be positive");
  const RaySolution ray = continue_along_ray(p, a.ray, a.rmax);
  const GronwallFactors base = gronwall_factors(p, a.ray, a.r0, a.rmax);
  const std::string format = a.out.empty() ? cfg.format : a.out;

  Json rows = Json::array();
  if (format == "csv") std::cout << "r,re_f,im_f,abs_f,abs_fp,bound,residual\n";
  for (int k = 0; k <= a.points; ++k) {
    const double r = a.rmax * k / a.points;
    const Complex f = ray.value(r), fp = ray.derivative(r), fpp = ray.second_derivative(r);
    const double res = std::abs(fpp + p.coefficient(ray.point(r)) * f) / (1.0 + std::abs(f));
    double bound = std::nan("");
    if (r > a.r0) bound = gronwall_bound(p, a.ray, a.r0, r);
    if (r == a.r0) bound = base.prefactor;
    if (format == "csv") {
      std::cout << shortest(r) << "," << shortest(f.real()) << "," << shortest(f.imag()) << "," << shortest(std::abs(f))
                << "," << shortest(std::abs(fp)) << "," << (std::isnan(bound) ? "" : shortest(bound)) << ","
                << shortest(res) << "\n";
    } else {
      rows.push_back(Json{{"r", r},
                          {"f", to_json(f)},
                          {"abs_fp", std::abs(fp)},
                          {"bound", std::isnan(bound) ? Json(nullptr) : Json(bound)},
                          {"residual", res}});
    }
  }
  if (format != "csv") emit(Json{{"theta", a.ray}, {"r0", a.r0}, {"patches", ray.patches().size()}, {"rows", rows}});
}

// ---- gallery -------------------------------------------------------------

void run_gallery_list(const RunConfig& cfg) {
  if (cfg.format == "csv") {
    std::cout << "name,description\n";
    for (const std::string& n : gallery_names()) std::cout << n << ",\"" << gallery_description(n) << "\"\n";
    return;
  }
  Json items = Json::array();
  for (const std::string& n : gallery_names()) items.push_back(Json{{"name", n}, {"description", gallery_description(n)}});
  emit(Json{{"entries", items}});
}

void run_gallery_info(const std::string& name, const std::vector<std::string>& params) {
  const GalleryEntry e = gallery_get(name, parse_params(params));
  Json sols = Json::array(), sing = Json::array(), facts = Json::array(), pars = Json::object();
  for (const Expr& f : e.solutions) sols.push_back(f.to_string());
  for (const Complex& s : e.singularities) sing.push_back(to_json(s));
  for (const Fact& f : e.facts) facts.push_back(Json{{"id", f.id}, {"statement", f.statement}, {"location", f.location}});
  for (const auto& [k, v] : e.parameters) pars[k] = v;
  emit(Json{{"name", e.name},
            {"description", gallery_description(name)},
            {"parameters", pars},
            {"A", e.coefficient.to_string()},
            {"solutions", sols},
            {"singularities", sing},
            {"facts", facts}});
}

bool run_gallery_verify(const std::string& name, const std::vector<std::string>& params) {
  const VerifyReport r = gallery_verify(gallery_get(name, parse_params(params)));
  emit(to_json(r));
  return r.passed;
}

// ---- valence -------------------------------------------------------------

struct ValenceArgs {
  std::string func, zeta = "0";
  double r = 0.5, a = -0.5, b = 0.5, gamma = 1.0;
  int n_lo = -3, n_hi = 3;
};

void run_valence(const RunConfig& cfg, const std::string& mode, const ValenceArgs& v) {
  if (mode == "hille") {
    const std::vector<double> z = hille_zeros(v.gamma, v.n_lo, v.n_hi);
    if (cfg.format == "csv") {
      std::cout << "n,z\n";
      for (int n = v.n_lo; n <= v.n_hi; ++n) std::cout << n << "," << shortest(z[n - v.n_lo]) << "\n";
      return;
    }
    emit(Json{{"gamma", v.gamma}, {"n_lo", v.n_lo}, {"zeros", z}});
    return;
  }
  if (v.func.empty()) throw ParseError("--func is required");
  const Expr f = parse_expression(v.func);
  if (mode == "count") {
    const CountResult c = count_preimages(f, parse_constant(v.zeta), v.r);
    emit(to_json(c));
  } else if (mode == "integral") {
    const double val = valence_integral(f, parse_constant(v.zeta), v.r);
    emit(Json{{"zeta0", to_json(parse_constant(v.zeta))}, {"r_inner", v.r}, {"value", val}});
  } else if (mode == "zeros") {
    const std::vector<double> z = find_zeros_on_segment(f, v.a, v.b);
    if (cfg.format == "csv") {
      std::cout << "index,z\n";
      for (std::size_t i = 0; i < z.size(); ++i) std::cout << i << "," << shortest(z[i]) << "\n";
      return;
    }
    emit(Json{{"a", v.a}, {"b", v.b}, {"zeros", z}});
  }
}

// ---- inverse -------------------------------------------------------------

struct InverseArgs {
  std::string f1, f2;
  double radius = 0.99;
  int samples = 200;
};

void run_inverse(const RunConfig& cfg, const InverseArgs& a) {
  const SolutionPair raw = make_solution_pair(parse_expression(a.f1), parse_expression(a.f2));
  const SolutionPair p = normalize_pair(raw);
  const Expr A = coefficient_from_pair(p);
  const Expr S = schwarzian(p.f1 / p.f2);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> pts;
  for (int i = 0; i < a.samples; ++i) {
    pts.push_back(std::polar(0.9 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng)));
  }
  Json samples = Json::array();
  double schwarz_err = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Complex Az = A(pts[i]);
    if (i < 8) samples.push_back(Json{{"z", to_json(pts[i])}, {"A", to_json(Az)}});
    schwarz_err = std::max(schwarz_err, std::abs(S(pts[i]) - 2.0 * Az) / std::max(std::abs(2.0 * Az), 1e-300));
  }
  const DiscGrid grid = DiscGrid::boundary_refined(cfg.depth, 0.25, cfg.angles);
  const Thm6Report t6 = thm6_report(p, cfg.sup());
  Json out{{"wronskian", to_json(raw.wronskian_value)},
           {"A_recovered_samples", samples},
           {"thm6_quantity", to_json(t6.quantity)},
           {"thm6_bloch_max", t6.bloch_max},
           {"thm6_ratio", t6.ratio},
           {"pair_infimum", to_json(pair_infimum(p, grid))},
           {"ratio_spherical", to_json(ratio_spherical(p, grid))},
           {"ratio_spherical_crosscheck", ratio_spherical_crosscheck(p, pts)},
           {"schwarzian_check", schwarz_err}};
  try {
    out["separation"] = to_json(zero_pole_separation(p, a.radius));
  } catch (const ConvergenceError& e) {
    out["separation"] = Json{{"error", e.what()}};
  }
  out["omitted_values"] = to_json(omitted_values(p, DiscGrid::uniform(a.radius, 32, 128)));
  emit(out);
}

int fail(int code, const std::string& type, const std::string& message) {
  Json j{{"schema", kJsonSchema}, {"error", Json{{"type", type}, {"message", message}}}};
  std::cout << dump(j) << "\n";
  std::cerr << "discode: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discode: numerics for f'' + A f = 0 in the unit disc"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--depth", cfg.depth, "Sup-grid depth: radii 1 - 10^(-k/4), k = 1..depth")
      ->default_val(40)
      ->check(CLI::Range(1, 80));
  app.add_option("--angles", cfg.angles, "Angles per circle")->default_val(512)->check(CLI::Range(64, 1 << 16));
  app.add_option("--tol", cfg.tol, "Quadrature tolerance for translate norms")->default_val(1e-10);
  app.add_option("--format", cfg.format, "Output format")->default_val("json")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "Seed for random sample points")->default_val(0);
  app.add_option("--threads", cfg.threads, "Worker threads (results do not depend on it)")
      ->default_val(1)
      ->check(CLI::Range(1, 256));

  NormArgs na;
  auto* norm = app.add_subcommand(
      "norm",
      "Function-space quantities: growth norms sup |A|(1-|z|^2)^2 log(e/(1-|z|))^alpha (l<alpha>), Bloch, "
      "the Bloch product |f||A|(1-|z|^2)^2 (bb), spherical, Hardy means, the Nevanlinna proximity, BMOA via "
      "Mobius translates, the VMOA profile, the logarithmic growth ratio, the weighted Dirichlet integral "
      "and the maximum modulus");
  norm->add_option("--func", na.func, "Function (or coefficient for l<alpha>)")->required();
  norm->add_option("--space", na.space,
                   "l<alpha> | bloch | bb | spherical | bmoa | vmoa | hardy | nevanlinna | logratio | dirichlet | maxmod")
      ->required();
  norm->add_option("--coef", na.coef, "Coefficient A (bb only)");
  norm->add_option("--r", na.r, "Radius (hardy, nevanlinna, maxmod)");
  norm->add_option("--p", na.p, "Exponent p (hardy)");
  norm->add_option("--alpha", na.alpha, "Exponent alpha (logratio)");
  norm->add_option("--beta", na.beta, "Weight exponent beta (dirichlet)");
  norm->add_option("--depth-r", na.depth_r, "Truncation radius (dirichlet)");

  CheckArgs ca;
  auto* check = app.add_subcommand(
      "check",
      "Sufficient coefficient conditions: thm1 (the Gronwall-type sup M(r,A)(1-r)^2 exp(int M(t,A)(1-t)dt) "
      "for bounded solutions), bz (|A|(1-|z|)^2 log(1/(1-|z|)) < 1), power_bloch (||A||_{L^1} < 4/n), "
      "nehari (||A||_{L^0} <= 1 univalence), finite_zeros, bmoa_integral, vmoa_integral, loglog, and the "
      "auxiliary integral i_alpha with limit 1/(4 alpha)");
  check->add_option("--coef", ca.coef, "Coefficient A");
  check->add_option("--criterion", ca.criterion, "Criterion id")
      ->required()
      ->check(CLI::IsMember({"thm1", "bz", "power_bloch", "nehari", "finite_zeros", "bmoa_integral", "vmoa_integral",
                             "loglog", "i_alpha"}));
  check->add_option("--r0", ca.r0, "Base radius (thm1, vmoa_integral)");
  check->add_option("--n", ca.n, "Power n (power_bloch)");
  check->add_option("--R", ca.R, "Inner radius (finite_zeros)");
  check->add_option("--r", ca.r, "Radius (i_alpha)");
  check->add_option("--alpha", ca.alpha, "Exponent (i_alpha)");

  SolveArgs sa;
  auto* solve = app.add_subcommand(
      "solve",
      "Solve f'' + A f = 0 by Taylor recurrence and continue along a ray; prints r, f, |f'|, the Gronwall "
      "bound (M(r0,f) + M(r0,f')(1-r0)) exp(int_{r0}^r |A|(1-t)dt) and the residual");
  solve->add_option("--coef", sa.coef, "Coefficient A")->required();
  solve->add_option("--f0", sa.f0, "f(0)");
  solve->add_option("--fp0", sa.fp0, "f'(0)");
  solve->add_option("--ray", sa.ray, "Ray angle theta");
  solve->add_option("--rmax", sa.rmax, "Final radius");
  solve->add_option("--r0", sa.r0, "Base radius of the Gronwall bound");
  solve->add_option("--points", sa.points, "Number of equal radial steps");
  solve->add_option("--out", sa.out, "Output format (overrides --format)")->check(CLI::IsMember({"json", "csv"}));

  std::string gname;
  std::vector<std::string> gparams;
  auto* gallery = app.add_subcommand("gallery", "Explicit coefficient/solution families with checkable facts");
  gallery->require_subcommand(1);
  auto* glist = gallery->add_subcommand("list", "List the families");
  auto* ginfo = gallery->add_subcommand("info", "Show a family: A, solutions, singularities, facts");
  ginfo->add_option("name", gname, "Family name")->required();
  ginfo->add_option("--param", gparams, "Parameter name=value");
  auto* gverify = gallery->add_subcommand("verify", "Residual check of every solution plus each fact");
  gverify->add_option("name", gname, "Family name")->required();
  gverify->add_option("--param", gparams, "Parameter name=value");

  ValenceArgs va;
  auto* valence = app.add_subcommand(
      "valence", "Counting function n(f, zeta) by the argument principle, the area-formula valence integral, "
                 "real zeros and the Hille zero formula z_n = tanh(pi n / (2 gamma))");
  valence->require_subcommand(1);
  auto* vcount = valence->add_subcommand("count", "Number of zeta-points in |z| < r");
  vcount->add_option("--func", va.func)->required();
  vcount->add_option("--zeta", va.zeta);
  vcount->add_option("--r", va.r);
  auto* vint = valence->add_subcommand("integral", "int |f'|^2 [f in D(zeta0, 1)] over |z| < r");
  vint->add_option("--func", va.func)->required();
  vint->add_option("--zeta", va.zeta, "Centre zeta0");
  vint->add_option("--r", va.r, "Inner radius");
  auto* vzeros = valence->add_subcommand("zeros", "Real zeros on [a, b]");
  vzeros->add_option("--func", va.func)->required();
  vzeros->add_option("--a", va.a);
  vzeros->add_option("--b", va.b);
  auto* vhille = valence->add_subcommand("hille", "Closed-form Hille zeros");
  vhille->add_option("--gamma", va.gamma);
  vhille->add_option("--n-lo", va.n_lo);
  vhille->add_option("--n-hi", va.n_hi);

  InverseArgs ia;
  auto* inverse = app.add_subcommand(
      "inverse", "Converse problem for a solution pair: A = f1'f2'' - f1''f2' after normalising W = 1, the "
                 "sup |A|(1-|z|^2)^{5/2}, inf(|f1| + |f2|), the spherical derivative 1/(|f1|^2 + |f2|^2) of "
                 "f1/f2, the Schwarzian identity S = 2A, zero separation and heuristic omitted values");
  inverse->add_option("--f1", ia.f1)->required();
  inverse->add_option("--f2", ia.f2)->required();
  inverse->add_option("--radius", ia.radius, "Region radius for zeros and omitted values");
  inverse->add_option("--samples", ia.samples, "Random sample points (seeded)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    set_thread_count(cfg.threads);
    bool ok = true;
    if (*norm) {
      run_norm(cfg, na);
    } else if (*check) {
      run_check(cfg, ca);
    } else if (*solve) {
      run_solve(cfg, sa);
    } else if (*gallery) {
      if (*glist) run_gallery_list(cfg);
      if (*ginfo) run_gallery_info(gname, gparams);
      if (*gverify) ok = run_gallery_verify(gname, gparams);
    } else if (*valence) {
      const std::string mode = *vcount ? "count" : *vint ? "integral" : *vzeros ? "zeros" : "hille";
      run_valence(cfg, mode, va);
    } else if (*inverse) {
      run_inverse(cfg, ia);
    }
    return ok ? 0 : 1;
  } catch (const ParseError& e) {
    return fail(2, "parse", e.what());
  } catch (const DomainError& e) {
    return fail(1, "domain", e.what());
  } catch (const ConvergenceError& e) {
    return fail(1, "convergence", e.what());
  } catch (const EvaluationError& e) {
    return fail(1, "evaluation", e.what());
  } catch (const std::exception& e) {
    return fail(1, "error", e.what());
  }
}
