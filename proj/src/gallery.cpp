#include "discode/gallery.hpp"

#include <cmath>
#include <regex>
#include <sstream>

#include "discode/disc.hpp"
#include "discode/errors.hpp"
#include "discode/ode.hpp"
#include "discode/spaces.hpp"
#include "discode/valence.hpp"

namespace discode {

namespace {

struct Family {
  std::string name;
  std::string description;
  std::map<std::string, double> defaults;
  GalleryEntry (*build)(const GalleryParams&);
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double param(const GalleryParams& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw DomainError("missing gallery parameter '" + key + "'");
  return it->second;
}

FactResult near(const std::string& what, Complex got, Complex want, double tol) {
  const double err = std::abs(got - want);
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want << ", |diff| = " << err;
  return {err <= tol, os.str()};
}

Fact wronskian_fact(const std::string& location, Expr f1, Expr f2, Complex expected) {
  std::ostringstream st;
  st << "W(f1, f2) is constant and equals " << expected;
  return Fact{"wronskian", st.str(), location, [f1, f2, expected] {
                double worst = 0.0;
                for (Complex z : {Complex(0.0), Complex(0.3, 0.0), Complex(0.0, 0.5), Complex(-0.4, 0.6)}) {
                  worst = std::max(worst, std::abs(wronskian(f1, f2, z) - expected));
                }
                return FactResult{worst <= 1e-9 * std::max(1.0, std::abs(expected)),
                                  "max |W - expected| over 4 points = " + fmt(worst)};
              }};
}

Expr with_sing(const Expr& e, const std::vector<Complex>& s) { return e.with_singularities(s); }

GalleryEntry build_hille(const GalleryParams& p) {
  const double g = param(p, "gamma");
  if (!(g > 0.0)) throw DomainError("hille requires gamma > 0");
  const std::vector<Complex> sing{1.0, -1.0};
  const Expr z = Expr::z();
  const Expr L = log(1.0 + z) - log(1.0 - z);
  const Expr root = sqrt(1.0 - z) * sqrt(1.0 + z);
  GalleryEntry e;
  e.name = "hille";
  e.parameters = p;
  e.singularities = sing;
  e.coefficient = with_sing((1.0 + 4.0 * g * g) / pow((1.0 - z) * (1.0 + z), 2.0), sing);
  const Expr f1 = with_sing(root * sin(g * L), sing);
  const Expr f2 = with_sing(root * cos(g * L), sing);
  e.solutions = {f1, f2};
  e.facts.push_back(Fact{
      "zeros", "zeros at z_n = (e^{pi n/gamma} - 1)/(e^{pi n/gamma} + 1)", "Hille family", [f1, g] {
        // All zeros with z_n <= 1 - 1e-7 on (0, 1).
        int n_max = 1;
        while (std::tanh(kPi * (n_max + 1) / (2.0 * g)) <= 1.0 - 1e-7) ++n_max;
        const double lo = 0.5 * std::tanh(kPi / (2.0 * g));
        const std::vector<double> found = find_zeros_on_segment(f1, lo, 1.0 - 1e-7);
        const std::vector<double> expected = hille_zeros(g, 1, n_max);
        if (found.size() != expected.size()) {
          return FactResult{false, "found " + std::to_string(found.size()) + " zeros, expected " +
                                       std::to_string(expected.size())};
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < found.size(); ++i) worst = std::max(worst, std::abs(found[i] - expected[i]));
        return FactResult{worst <= 1e-10, std::to_string(found.size()) + " zeros, max abs error " + fmt(worst)};
      }});
  e.facts.push_back(wronskian_fact("Hille family", f1, f2, -2.0 * g));
  e.facts.push_back(Fact{"coefficient_at_origin", "A(0) = 1 + 4 gamma^2", "Hille family", [e_a = e.coefficient, g] {
                           return near("A(0)", e_a(0.0), 1.0 + 4.0 * g * g, 1e-12);
                         }});
  return e;
}

GalleryEntry build_power(const GalleryParams& p) {
  const double g = param(p, "gamma");
  if (!(g > 1.0)) throw DomainError("power requires gamma > 1");
  const std::vector<Complex> sing{1.0, -1.0};
  const Expr z = Expr::z();
  GalleryEntry e;
  e.name = "power";
  e.parameters = p;
  e.singularities = sing;
  e.coefficient = with_sing((1.0 - g * g) / pow((1.0 - z) * (1.0 + z), 2.0), sing);
  const Expr f1 = with_sing(pow(1.0 + z, (g + 1.0) / 2.0) * pow(1.0 - z, -(g - 1.0) / 2.0), sing);
  const Expr f2 = with_sing(pow(1.0 - z, (g + 1.0) / 2.0) * pow(1.0 + z, -(g - 1.0) / 2.0), sing);
  e.solutions = {f1, f2};
  e.facts.push_back(Fact{"initial_values", "f1(0) = 1 and f1'(0) = gamma", "power family", [f1, g] {
                           const FactResult a = near("f1(0)", f1(0.0), 1.0, 1e-12);
                           const FactResult b = near("f1'(0)", diff(f1)(0.0), g, 1e-12);
                           return FactResult{a.passed && b.passed, a.detail + "; " + b.detail};
                         }});
  e.facts.push_back(wronskian_fact("power family", f1, f2, -2.0 * g));
  e.facts.push_back(Fact{"not_bloch", "f1 lies outside the Bloch space", "power family", [f1] {
                           const NormEstimate b = bloch_seminorm(f1);
                           return FactResult{b.divergent, std::string("Bloch trace verdict: ") +
                                                              (b.divergent ? "divergent" : "not divergent") +
                                                              ", last value " + fmt(b.value)};
                         }});
  return e;
}

GalleryEntry build_exp_singular(const GalleryParams& p) {
  const std::vector<Complex> sing{1.0};
  const Expr z = Expr::z();
  GalleryEntry e;
  e.name = "exp_singular";
  e.parameters = p;
  e.singularities = sing;
  e.coefficient = with_sing(-4.0 * z / pow(1.0 - z, 4.0), sing);
  const Expr f = with_sing(exp(-(1.0 + z) / (1.0 - z)), sing);
  e.solutions = {f};
  e.facts.push_back(Fact{"bounded", "|f| <= 1 on the disc", "exp-singular family", [f] {
                           double worst = 0.0;
                           DiscGrid::boundary_refined(16, 0.25, 64).for_each_point(
                               [&](Complex w, std::size_t) { worst = std::max(worst, std::abs(f(w))); });
                           return FactResult{worst <= 1.0, "max |f| on grid = " + fmt(worst)};
                         }});
  e.facts.push_back(Fact{"companion_growth",
                         "the reduction-of-order companion grows on (0,1): g(0.9)/g(0.5) > 1e3", "exp-singular family",
                         [f] {
                           const ReductionOfOrder g = reduction_of_order(f);
                           const double ratio = std::abs(g.value(0.9)) / std::abs(g.value(0.5));
                           return FactResult{ratio > 1e3, "g(0.9)/g(0.5) = " + fmt(ratio)};
                         }});
  return e;
}

GalleryEntry build_log_power(const GalleryParams& p) {
  const double a = param(p, "alpha");
  if (!(a > 0.0 && a < 1.0)) throw DomainError("log_power requires 0 < alpha < 1");
  const std::vector<Complex> sing{1.0};
  const Expr z = Expr::z();
  const Expr L = 1.0 - log(1.0 - z);  // log(e / (1 - z))
  GalleryEntry e;
  e.name = "log_power";
  e.parameters = p;
  e.singularities = sing;
  e.coefficient =
      with_sing(-a / pow(1.0 - z, 2.0) * ((a - 1.0) * pow(L, -2.0) + pow(L, -1.0)), sing);
  const Expr f = with_sing(pow(L, a), sing);
  e.solutions = {f};
  e.facts.push_back(Fact{"origin", "f(0) = 1", "log-power family", [f] { return near("f(0)", f(0.0), 1.0, 1e-15); }});
  e.facts.push_back(Fact{"l1_finite", "A belongs to L^1 with norm of order alpha", "log-power family",
                         [A = e.coefficient, a] {
                           const NormEstimate n = growth_norm(A, 1.0);
                           const double ratio = n.value / a;
                           return FactResult{n.converged && ratio < 10.0,
                                             "||A||_{L^1} = " + fmt(n.value) + ", ratio to alpha " + fmt(ratio)};
                         }});
  return e;
}

GalleryEntry build_loglog_power(const GalleryParams& p) {
  const double a = param(p, "alpha");
  if (!(a > 0.0)) throw DomainError("loglog_power requires alpha > 0");
  const std::vector<Complex> sing{1.0};
  const Expr z = Expr::z();
  const Expr Lp = std::exp(1.0) - log(1.0 - z);  // log(e^e / (1 - z))
  const Expr LL = log(Lp);
  GalleryEntry e;
  e.name = "loglog_power";
  e.parameters = p;
  e.singularities = sing;
  e.coefficient = with_sing(
      -a * (a - 1.0 + (Lp - 1.0) * LL) / (pow(1.0 - z, 2.0) * pow(Lp, 2.0) * pow(LL, 2.0)), sing);
  const Expr f = with_sing(pow(LL, a), sing);
  e.solutions = {f};
  e.facts.push_back(Fact{"unbounded", "f is unbounded: M(1 - 1e-8, f) > M(0.9, f)", "loglog-power family", [f] {
                           const double inner = max_modulus(f, 0.9).value;
                           const double outer = max_modulus(f, 1.0 - 1e-8).value;
                           return FactResult{outer > inner, "M(0.9) = " + fmt(inner) + ", M(1-1e-8) = " + fmt(outer)};
                         }});
  e.facts.push_back(Fact{"zero_free", "f has no zeros in |z| < 0.99", "loglog-power family", [f] {
                           const CountResult c = count_preimages(f, 0.0, 0.99);
                           return FactResult{c.count == 0, "zero count on |z| < 0.99 = " + std::to_string(c.count)};
                         }});
  return e;
}

GalleryEntry build_zero(const GalleryParams& p) {
  GalleryEntry e;
  e.name = "zero";
  e.parameters = p;
  e.coefficient = Expr(0.0);
  e.solutions = {Expr(1.0), Expr::z()};
  e.facts.push_back(wronskian_fact("f'' = 0", e.solutions[0], e.solutions[1], 1.0));
  return e;
}

GalleryEntry build_constant(const GalleryParams& p) {
  const double c = param(p, "c");
  GalleryEntry e;
  e.name = "constant";
  e.parameters = p;
  e.coefficient = Expr(c);
  const Expr z = Expr::z();
  if (c == 0.0) {
    e.solutions = {Expr(1.0), z};
  } else {
    const Complex k = std::sqrt(Complex(c, 0.0));
    e.solutions = {cos(k * z), sin(k * z) / k};
  }
  e.facts.push_back(wronskian_fact("constant coefficient", e.solutions[0], e.solutions[1], 1.0));
  return e;
}

const std::vector<Family>& families() {
  static const std::vector<Family> f{
      {"hille", "A = (1+4g^2)/(1-z^2)^2 with bounded solutions sqrt(1-z^2) sin/cos(g log((1+z)/(1-z)))",
       {{"gamma", 1.0}}, build_hille},
      {"power", "A = (1-g^2)/(1-z^2)^2 with non-Bloch solutions (1+z)^{(g+1)/2}(1-z)^{-(g-1)/2} and mirror",
       {{"gamma", 2.0}}, build_power},
      {"exp_singular", "A = -4z/(1-z)^4 with the bounded solution exp(-(1+z)/(1-z))", {}, build_exp_singular},
      {"log_power", "A in L^1 with the solution (log(e/(1-z)))^alpha, 0 < alpha < 1", {{"alpha", 0.5}},
       build_log_power},
      {"loglog_power", "A with the zero-free unbounded VMOA solution (log log(e^e/(1-z)))^alpha",
       {{"alpha", 1.0}}, build_loglog_power},
      {"zero", "A = 0 with solutions 1 and z", {}, build_zero},
      {"constant", "A = c with solutions cos(sqrt(c) z) and sin(sqrt(c) z)/sqrt(c)", {{"c", 1.0}}, build_constant},
  };
  return f;
}

const Family& family(const std::string& name) {
  for (const Family& f : families()) {
    if (f.name == name) return f;
  }
  throw DomainError("unknown gallery entry '" + name + "'");
}

}  // namespace

std::vector<std::string> gallery_names() {
  std::vector<std::string> out;
  for (const Family& f : families()) out.push_back(f.name);
  return out;
}

std::string gallery_description(const std::string& name) { return family(name).description; }

GalleryEntry gallery_get(const std::string& name, const GalleryParams& params) {
  const Family& f = family(name);
  GalleryParams merged = f.defaults;
  for (const auto& [k, v] : params) {
    if (!f.defaults.count(k)) throw DomainError("gallery entry '" + name + "' has no parameter '" + k + "'");
    merged[k] = v;
  }
  return f.build(merged);
}

VerifyReport gallery_verify(const GalleryEntry& entry) {
  VerifyReport rep;
  rep.name = entry.name;
  const DiscGrid grid = DiscGrid::uniform(0.9, 16, 64, false);
  for (std::size_t i = 0; i < entry.solutions.size(); ++i) {
    VerifyItem item;
    item.id = "residual_f" + std::to_string(i + 1);
    try {
      const double r = residual(entry.solutions[i], entry.coefficient, grid);
      item.passed = r <= kGalleryResidualTolerance;
      item.detail = "max |f'' + A f| / (1 + |f|) on |z| <= 0.9 = " + fmt(r);
    } catch (const Error& ex) {
      item.detail = ex.what();
    }
    rep.items.push_back(item);
  }
  for (const Fact& fact : entry.facts) {
    VerifyItem item;
    item.id = fact.id;
    try {
      const FactResult r = fact.check();
      item.passed = r.passed;
      item.detail = r.detail;
    } catch (const Error& ex) {
      item.detail = ex.what();
    }
    rep.items.push_back(item);
  }
  for (const VerifyItem& it : rep.items) rep.passed = rep.passed && it.passed;
  return rep;
}

Expr resolve_gallery_reference(const std::string& ref) {
  static const std::regex pattern(R"(^\s*gallery:([A-Za-z_]+)(?:\(([^)]*)\))?\.(A|f|f1|f2)\s*$)");
  std::smatch m;
  if (!std::regex_match(ref, m, pattern)) throw ParseError("malformed gallery reference '" + ref + "'");
  GalleryParams params;
  const std::string args = m[2].str();
  static const std::regex kv(R"(\s*([A-Za-z_]+)\s*=\s*([-+0-9.eE]+)\s*)");
  std::size_t start = 0;
  while (start < args.size()) {
    std::size_t comma = args.find(',', start);
    if (comma == std::string::npos) comma = args.size();
    const std::string item = args.substr(start, comma - start);
    std::smatch km;
    if (!std::regex_match(item, km, kv)) throw ParseError("malformed gallery parameter '" + item + "'");
    params[km[1].str()] = std::stod(km[2].str());
    start = comma + 1;
  }
  const GalleryEntry e = gallery_get(m[1].str(), params);
  const std::string field = m[3].str();
  if (field == "A") return e.coefficient;
  const std::size_t idx = field == "f2" ? 1 : 0;
  if (idx >= e.solutions.size()) throw DomainError("gallery entry '" + e.name + "' has no solution " + field);
  return e.solutions[idx];
}

}  // namespace discode
