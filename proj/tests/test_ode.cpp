#include <doctest.h>

#include <cmath>

#include "discode/gallery.hpp"
#include "discode/ode.hpp"

using namespace discode;

namespace {
const Expr z = Expr::z();
double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
}  // namespace

TEST_SUITE("ode-solver") {
  TEST_CASE("taylor_solve: zero and constant coefficients") {
    const TaylorPatch lin = taylor_solve({Expr(0.0), 1.0, 2.0}, 10);
    CHECK(std::abs(lin.coefficients[0] - 1.0) < 1e-15);
    CHECK(std::abs(lin.coefficients[1] - 2.0) < 1e-15);
    for (std::size_t k = 2; k < lin.coefficients.size(); ++k) CHECK(std::abs(lin.coefficients[k]) == 0.0);

    const TaylorPatch c = taylor_solve({Expr(1.0), 1.0, 0.0}, 12);
    double fact = 1.0;
    for (int k = 0; k <= 12; ++k) {
      if (k > 0) fact *= k;
      const double want = k % 2 ? 0.0 : (k % 4 ? -1.0 : 1.0) / fact;
      CHECK(std::abs(c.coefficients[k] - want) < 1e-15);
    }
  }

  TEST_CASE("taylor_solve matches the power-family closed form") {
    const GalleryEntry e = gallery_get("power", {{"gamma", 2.0}});
    const TaylorPatch p = taylor_solve({e.coefficient, 1.0, 2.0}, 20);
    const TaylorPatch want = taylor_at(e.solutions[0], 0.0, 20);
    for (int k = 0; k <= 20; ++k) CHECK(std::abs(p.coefficients[k] - want.coefficients[k]) < 1e-10);
  }

  TEST_CASE("ray continuation: linear and closed-form oracles") {
    for (double th : {0.0, 1.0, 2.5}) {
      const RaySolution r = continue_along_ray({Expr(0.0), 1.0, 2.0}, th, 0.95);
      for (double t : {0.1, 0.5, 0.95}) CHECK(std::abs(r.value(t) - (1.0 + 2.0 * std::polar(t, th))) < 1e-13);
    }
    const GalleryEntry h = gallery_get("hille", {{"gamma", 1.0}});
    const RaySolution hr = continue_along_ray({h.coefficient, 0.0, 2.0}, kPi / 2.0, 0.99);
    for (double t : {0.5, 0.9, 0.99}) CHECK(rel(hr.value(t), h.solutions[0](hr.point(t))) < 1e-8);

    const GalleryEntry pw = gallery_get("power", {{"gamma", 2.0}});
    const RaySolution pr = continue_along_ray({pw.coefficient, 1.0, 2.0}, kPi / 4.0, 0.999);
    for (double t : {0.5, 0.99, 0.999}) CHECK(rel(pr.value(t), pw.solutions[0](pr.point(t))) < 1e-7);
  }

  TEST_CASE("residual detects a wrong coefficient") {
    const GalleryEntry h = gallery_get("hille", {{"gamma", 1.0}});
    const DiscGrid g = DiscGrid::uniform(0.9, 16, 64, false);
    CHECK(residual(h.solutions[0], h.coefficient, g) < 1e-9);
    CHECK(residual(Expr(0.0), h.coefficient, g) == 0.0);
    CHECK(residual(h.solutions[0], 1.01 * h.coefficient, g) >= 1e-3);
  }

  TEST_CASE("reduction of order") {
    const ReductionOfOrder one = reduction_of_order(Expr(1.0));
    CHECK(std::abs(one.value(Complex{0.3, 0.4}) - Complex{0.3, 0.4}) < 1e-12);

    const Expr f = exp(-(1.0 + z) / (1.0 - z));
    const ReductionOfOrder g = reduction_of_order(f);
    CHECK(std::abs(g.value(0.9)) / std::abs(g.value(0.5)) > 1e3);
    for (Complex p : {Complex{0.0}, Complex{0.3}, Complex{0.0, 0.5}}) {
      const Complex w = f(p) * g.derivative(p) - diff(f)(p) * g.value(p);
      CHECK(std::abs(w - 1.0) < 1e-8);
    }
  }

  TEST_CASE("Gronwall bound") {
    const ODEProblem zero{Expr(0.0), 1.0, 2.0};
    const double b = gronwall_bound(zero, 0.3, 0.5, 0.6);
    CHECK(b == doctest::Approx(1.0 + 2.0 * 0.5 + 2.0 * 0.5));
    CHECK(gronwall_bound(zero, 0.3, 0.5, 0.99) == doctest::Approx(b));

    const GalleryEntry h = gallery_get("hille", {{"gamma", 1.0}});
    const ODEProblem hp{h.coefficient, 0.0, 2.0};
    const RaySolution ray = continue_along_ray(hp, kPi / 2.0, 0.999);
    for (double r : {0.9, 0.99, 0.999}) CHECK(std::abs(ray.value(r)) <= gronwall_bound(hp, kPi / 2.0, 0.5, r));

    const GalleryEntry lp = gallery_get("log_power", {{"alpha", 0.5}});
    const ODEProblem lpp{lp.coefficient, 1.0, 0.5};
    const RaySolution lray = continue_along_ray(lpp, kPi / 2.0, 0.999);
    CHECK(std::abs(lray.value(0.999)) <= gronwall_bound(lpp, kPi / 2.0, 0.0, 0.999));
  }

  TEST_CASE("Wronskians are constant") {
    const GalleryEntry h = gallery_get("hille", {{"gamma", 1.0}});
    const GalleryEntry p = gallery_get("power", {{"gamma", 2.0}});
    for (Complex q : {Complex{0.0}, Complex{0.4, 0.3}, Complex{-0.7, 0.1}}) {
      CHECK(std::abs(wronskian(h.solutions[0], h.solutions[0], q)) < 1e-14);
      CHECK(std::abs(wronskian(h.solutions[0], h.solutions[1], q) + 2.0) < 1e-12);
      CHECK(std::abs(wronskian(p.solutions[0], p.solutions[1], q) + 4.0) < 1e-12);
    }
  }
}
