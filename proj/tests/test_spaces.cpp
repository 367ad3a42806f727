#include <doctest.h>

#include <cmath>

#include "discode/gallery.hpp"
#include "discode/spaces.hpp"

using namespace discode;

namespace {
const Expr z = Expr::z();
const Expr log_e = log(std::exp(1.0) / (1.0 - z));
}  // namespace

TEST_SUITE("spaces") {
  TEST_CASE("growth norms") {
    CHECK(growth_norm(Expr(0.0), 1.0).value == 0.0);
    const NormEstimate h = growth_norm(gallery_get("hille", {{"gamma", 1.0}}).coefficient, 0.0);
    CHECK(h.value == doctest::Approx(5.0).epsilon(1e-10));
    REQUIRE(h.argmax);
    CHECK(std::abs(h.argmax->imag()) < 1e-6);
    CHECK(growth_norm(gallery_get("power", {{"gamma", 2.0}}).coefficient, 0.0).value ==
          doctest::Approx(3.0).epsilon(1e-10));
  }

  TEST_CASE("homogeneity and monotonicity in alpha") {
    const Expr A = gallery_get("log_power", {{"alpha", 0.5}}).coefficient;
    const double n1 = growth_norm(A, 1.0).value;
    CHECK(std::abs(growth_norm(Complex{0.0, -3.0} * A, 1.0).value - 3.0 * n1) <= 1e-10 * 3.0 * n1);
    CHECK(growth_norm(A, 0.0).value <= growth_norm(A, 0.5).value);
    CHECK(growth_norm(A, 0.5).value <= n1);
    const Expr f = gallery_get("hille", {{"gamma", 1.0}}).solutions[0];
    const double b = bloch_seminorm(f).value;
    CHECK(std::abs(bloch_seminorm(2.5 * f).value - 2.5 * b) <= 1e-10 * 2.5 * b);
  }

  TEST_CASE("Bloch seminorm") {
    CHECK(bloch_seminorm(Expr(4.0)).value == 0.0);
    const double v = bloch_seminorm(log_e, SupGrid{32}).value;
    CHECK(v >= 1.9);
    CHECK(v <= 2.0);
    const NormEstimate p3 = bloch_seminorm(gallery_get("power", {{"gamma", 3.0}}).solutions[0]);
    CHECK(p3.divergent);
    CHECK(trace_growth_exponent(p3.trace) == doctest::Approx(1.0).epsilon(0.1));
  }

  TEST_CASE("Bloch seminorm from ray solutions agrees with the expression") {
    const GalleryEntry e = gallery_get("hille", {{"gamma", 1.0}});
    std::vector<RaySolution> rays;
    for (int k = 0; k < 8; ++k) rays.push_back(continue_along_ray({e.coefficient, 0.0, 2.0}, kPi * (k + 0.5) / 8.0, 0.99));
    const NormEstimate r = bloch_seminorm(rays, SupGrid{8});
    CHECK(r.value > 0.0);
    CHECK(r.value <= bloch_seminorm(e.solutions[0], SupGrid{8}).value * (1.0 + 1e-8));
  }

  TEST_CASE("Bloch product") {
    const GalleryEntry h = gallery_get("hille", {{"gamma", 1.0}});
    CHECK(bb_product(Expr(0.0), h.coefficient).value == 0.0);
    CHECK(bb_product(h.solutions[0], h.coefficient).converged);
    const GalleryEntry p = gallery_get("power", {{"gamma", 3.0}});
    CHECK(bb_product(p.solutions[0], p.coefficient).divergent);
  }

  TEST_CASE("spherical seminorm") {
    CHECK(spherical_seminorm(Expr(2.0)).value == 0.0);
    const NormEstimate m = spherical_seminorm((1.0 + z) / (1.0 - z));
    CHECK(std::isfinite(m.value));
    CHECK_FALSE(m.divergent);
    const NormEstimate p = spherical_seminorm(gallery_get("power", {{"gamma", 2.0}}).solutions[0]);
    CHECK_FALSE(p.divergent);
  }

  TEST_CASE("Hardy means and proximity") {
    const Expr e = Expr(std::exp(1.0));
    CHECK(hardy_mean(e, 2.0, 0.5) == doctest::Approx(std::exp(2.0)));
    CHECK(proximity(e, 0.5) == doctest::Approx(1.0));
    CHECK(proximity(z * z / 2.0, 0.9) == 0.0);
    CHECK(hardy_mean(1.0 / (1.0 - z), 2.0, 0.5) == doctest::Approx(1.0 / (1.0 - 0.25)));
    const Expr f = gallery_get("power", {{"gamma", 2.0}}).solutions[0];
    double prev = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const double v = hardy_mean(f, 1.5, 0.1 * k);
      CHECK(v >= prev);
      prev = v;
    }
    // log|g| is the Poisson kernel, whose circle means are all 1.
    const Expr g = exp((1.0 + z) / (1.0 - z));
    for (double r : {0.5, 0.9, 0.99}) CHECK(proximity(g, r) == doctest::Approx(1.0).epsilon(1e-8));
  }

  TEST_CASE("translate norms and BMOA") {
    CHECK(translate_h2_norm(Expr(1.0), 0.3).value == 0.0);
    for (Complex a : {Complex{0.0}, Complex{0.5}, Complex{0.3, -0.6}}) {
      CHECK(translate_h2_norm(z, a).value == doctest::Approx(1.0 - std::norm(a)).epsilon(1e-8));
    }
    const NormEstimate b = bmoa_norm(z, default_bmoa_grid());
    CHECK(b.value == doctest::Approx(1.0).epsilon(1e-8));
    REQUIRE(b.argmax);
    CHECK(std::abs(*b.argmax) == 0.0);
    CHECK(bmoa_norm(Expr(2.0), default_bmoa_grid()).value == 0.0);
  }

  TEST_CASE("BMOA sup is monotone under grid refinement") {
    std::vector<Complex> coarse, fine;
    for (int k = 0; k < 4; ++k) coarse.push_back(std::polar(0.9, kPi * k / 2.0));
    fine = coarse;
    for (int k = 0; k < 4; ++k) fine.push_back(std::polar(0.99, kPi * (k + 0.5) / 2.0));
    CHECK(bmoa_norm(log_e, fine).value >= bmoa_norm(log_e, coarse).value);
  }

  TEST_CASE("VMOA profiles") {
    const std::vector<double> radii{0.9, 0.99, 0.999};
    for (const ProfilePoint& p : vmoa_profile(Expr(3.0), radii, 4)) CHECK(p.value == 0.0);
    const std::vector<ProfilePoint> bm = vmoa_profile(log_e, radii, 4);
    for (const ProfilePoint& p : bm) {
      CHECK(p.value > 0.5);
      CHECK(p.value < 10.0);
    }
    const Expr f = gallery_get("loglog_power", {{"alpha", 1.0}}).solutions[0];
    const std::vector<ProfilePoint> vm = vmoa_profile(f, radii, 8);
    CHECK(vm[1].value < vm[0].value);
    CHECK(vm[2].value < vm[1].value);
  }

  TEST_CASE("logarithmic growth ratio") {
    const NormEstimate one = log_growth_ratio(Expr(1.0), 1.0);
    CHECK(one.value == doctest::Approx(1.0));
    const Expr f = gallery_get("log_power", {{"alpha", 0.5}}).solutions[0];
    CHECK(log_growth_ratio(f, 0.5).value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(log_growth_ratio(f, 0.25).divergent);
  }

  TEST_CASE("weighted Dirichlet integral") {
    CHECK(weighted_dirichlet(Expr(1.0), 1.0, 0.999).value == 0.0);
    const double a = weighted_dirichlet(z, 1.0, 1.0 - 1e-6).value;
    const double b = weighted_dirichlet(z, 1.0, 1.0 - 1e-8).value;
    CHECK(std::isfinite(a));
    CHECK(std::abs(a - b) <= 1e-6 * b);
    const Expr f = gallery_get("log_power", {{"alpha", 0.25}}).solutions[0];
    const DirichletResult d = weighted_dirichlet(f, 1.0, 1.0 - 1e-8);
    for (std::size_t k = 3; k < d.increments.size(); ++k) CHECK(d.increments[k] < d.increments[k - 1]);
    CHECK(d.increments.back() < 1e-3);
  }
}
