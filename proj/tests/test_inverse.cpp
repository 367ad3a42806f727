#include <doctest.h>

#include <cmath>

#include "discode/errors.hpp"
#include "discode/gallery.hpp"
#include "discode/inverse.hpp"

using namespace discode;

namespace {
const Expr z = Expr::z();
double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
SolutionPair family_pair(const char* name, double gamma) {
  const GalleryEntry e = gallery_get(name, {{"gamma", gamma}});
  return make_solution_pair(e.solutions[0], e.solutions[1]);
}
const Complex samples[] = {{0.0, 0.0}, {0.5, 0.3}, {-0.8, 0.1}, {0.2, -0.85}, {0.89, 0.0}};
}  // namespace

TEST_SUITE("inverse") {
  TEST_CASE("normalisation") {
    const SolutionPair trivial = make_solution_pair(Expr(1.0), z);
    CHECK(trivial.normalized);
    const SolutionPair p = family_pair("power", 2.0);
    CHECK(std::abs(p.wronskian_value + 4.0) < 1e-12);
    const SolutionPair pn = normalize_pair(p);
    CHECK(pn.normalized);
    CHECK(rel(pn.f2(0.3), -0.25 * p.f2(0.3)) < 1e-14);
    const SolutionPair h = family_pair("hille", 1.0);
    CHECK(std::abs(h.wronskian_value + 2.0) < 1e-12);
    CHECK(rel(normalize_pair(h).f2(0.3), -0.5 * h.f2(0.3)) < 1e-14);
    CHECK_THROWS_AS(make_solution_pair(z, z * z), DomainError);
  }

  TEST_CASE("coefficient recovery") {
    const Expr zero = coefficient_from_pair(make_solution_pair(Expr(1.0), z));
    CHECK(std::abs(zero(Complex{0.4, 0.2})) < 1e-15);
    const Expr ap = coefficient_from_pair(normalize_pair(family_pair("power", 2.0)));
    const Expr ah = coefficient_from_pair(normalize_pair(family_pair("hille", 1.0)));
    for (Complex q : samples) {
      const Complex d = (1.0 - q * q) * (1.0 - q * q);
      CHECK(rel(ap(q), -3.0 / d) < 1e-9);
      CHECK(rel(ah(q), 5.0 / d) < 1e-9);
    }
  }

  TEST_CASE("Schwarzian") {
    const Complex a{0.3, 0.0};
    const Expr m = (a - z) / (1.0 - std::conj(a) * z);
    const Expr e = exp(z);
    const SolutionPair p = normalize_pair(family_pair("power", 2.0));
    const Expr sm = schwarzian(m), se = schwarzian(e), sw = schwarzian(p.f1 / p.f2);
    for (Complex q : samples) {
      CHECK(std::abs(sm(q)) < 1e-12);
      CHECK(std::abs(se(q) + 0.5) < 1e-13);
      CHECK(rel(sw(q), -6.0 / std::pow(1.0 - q * q, 2)) < 1e-8);
    }
  }

  TEST_CASE("weighted coefficient sup") {
    CHECK(thm6_quantity(Expr(0.0)).value == 0.0);
    const NormEstimate h = thm6_quantity(gallery_get("hille", {{"gamma", 1.0}}).coefficient);
    CHECK(std::isfinite(h.value));
    CHECK(h.trace.back().value == doctest::Approx(h.value));
    CHECK(std::isfinite(thm6_quantity(gallery_get("power", {{"gamma", 3.0}}).coefficient).value));
  }

  TEST_CASE("pair infimum") {
    const DiscGrid g = DiscGrid::boundary_refined(24, 0.25, 128);
    CHECK(pair_infimum(make_solution_pair(Expr(1.0), z), DiscGrid::uniform(0.9, 9, 64)).value == doctest::Approx(1.0));
    const NormEstimate h = pair_infimum(normalize_pair(family_pair("hille", 1.0)), g);
    CHECK(h.value < 1e-2);
    const NormEstimate ex = pair_infimum(normalize_pair(make_solution_pair(exp(z), exp(-z))), g);
    CHECK(ex.value > 0.5);
  }

  TEST_CASE("spherical derivative of the ratio") {
    const DiscGrid g = DiscGrid::boundary_refined(24, 0.25, 128);
    const NormEstimate t = ratio_spherical(make_solution_pair(Expr(1.0), z), DiscGrid::uniform(0.9, 9, 64));
    CHECK(t.value == doctest::Approx(1.0));
    const SolutionPair p = normalize_pair(family_pair("power", 2.0));
    CHECK(std::isfinite(ratio_spherical(p, g).value));
    CHECK(ratio_spherical_crosscheck(p, {samples, samples + 5}) < 1e-10);
    const NormEstimate h = ratio_spherical(normalize_pair(family_pair("hille", 1.0)), g);
    CHECK(h.value > 100.0);
  }

  TEST_CASE("zero separation") {
    const Separation none = zero_pole_separation(make_solution_pair(Expr(1.0), z), 0.9);
    CHECK(none.zeros1.empty());
    CHECK_FALSE(none.min_distance);

    const Separation h = zero_pole_separation(normalize_pair(family_pair("hille", 1.0)), 0.99);
    CHECK(h.zeros1.size() == 3);
    REQUIRE(h.min_distance);
    // Zeros of the cosine solution sit at tanh(pi/4 + k pi/2).
    CHECK(*h.min_distance == doctest::Approx(std::tanh(3.0 * kPi / 4.0) - std::tanh(kPi / 2.0)).epsilon(1e-8));

    const Separation s = zero_pole_separation(make_solution_pair(z - 0.3, z - 0.3 - 1e-3), 0.9);
    REQUIRE(s.min_distance);
    CHECK(std::abs(*s.min_distance - 1e-3) < 1e-8);
  }

  TEST_CASE("omitted values heuristic") {
    const OmittedValues inv = omitted_values(make_solution_pair(Expr(1.0), z), DiscGrid::uniform(0.9, 16, 64));
    CHECK(std::abs(inv.first) < 0.5);
    CHECK(std::abs(inv.second) <= 0.5);
    CHECK_FALSE(inv.covered);
    CHECK(inv.label == "heuristic, not certified");

    const OmittedValues disc = omitted_values(make_solution_pair(z, Expr(1.0)), DiscGrid::uniform(0.9, 16, 64));
    CHECK(std::abs(disc.first) > 1.0);
    CHECK(std::abs(disc.second) > 1.0);

    // The ratio ((1+z)/(1-z))^1.5 covers arguments in (-3pi/4, 3pi/4) only.
    const SolutionPair sec = family_pair("power", 1.5);
    const OmittedValues o = omitted_values(sec, DiscGrid::uniform(0.999, 64, 256));
    CHECK(std::isfinite(std::abs(o.first)));
    CHECK(std::abs(std::arg(o.first)) > 0.75 * kPi);
    CHECK(std::abs(std::arg(o.second)) > 0.75 * kPi);
  }
}
