#include <doctest.h>

#include <cmath>

#include "discode/disc.hpp"
#include "discode/errors.hpp"
#include "discode/gallery.hpp"
#include "discode/valence.hpp"

using namespace discode;

namespace {
const Expr z = Expr::z();
}

TEST_SUITE("valence") {
  TEST_CASE("counting preimages") {
    CHECK(count_preimages(z, 0.0, 0.5).count == 1);
    CHECK(count_preimages(z * z, 0.01, 0.5).count == 2);
    const std::vector<double> zn = hille_zeros(1.0, 3, 4);
    const Expr f = gallery_get("hille", {{"gamma", 1.0}}).solutions[0];
    const CountResult c = count_preimages(f, 0.0, 0.5 * (zn[0] + zn[1]));
    CHECK(c.count == 7);
    CHECK(c.residual < 1e-3);
    CHECK_THROWS_AS(count_preimages(z, 0.5, 0.5), DomainError);
  }

  TEST_CASE("valence integral") {
    CHECK(valence_integral(z, 0.0, 0.99) == doctest::Approx(kPi * 0.9801).epsilon(1e-6));
    const Expr lp = gallery_get("log_power", {{"alpha", 0.5}}).solutions[0];
    // The preimage of D(2, 1) reaches the circle away from z = 1, so the tail is O(1 - r).
    std::vector<double> v;
    for (int k = 2; k <= 5; ++k) v.push_back(valence_integral(lp, 2.0, 1.0 - std::pow(10.0, -k)));
    CHECK(v[3] - v[2] < 0.2 * (v[2] - v[1]));
    CHECK(v[3] - v[2] < 0.02 * v[3]);
  }

  TEST_CASE("Hille zero formula") {
    const std::vector<double> z0 = hille_zeros(1.0, 0, 0);
    CHECK(z0[0] == 0.0);
    const double e = std::exp(kPi);
    CHECK(hille_zeros(1.0, 1, 1)[0] == doctest::Approx((e - 1.0) / (e + 1.0)).epsilon(1e-15));
    const std::vector<double> s = hille_zeros(0.7, -4, 4);
    for (int n = 1; n <= 4; ++n) CHECK(s[4 - n] == -s[4 + n]);
  }

  TEST_CASE("real zeros on a segment") {
    const std::vector<double> lin = find_zeros_on_segment(z, -0.5, 0.5);
    REQUIRE(lin.size() == 1);
    CHECK(std::abs(lin[0]) < 1e-14);

    const Expr f = gallery_get("hille", {{"gamma", 1.0}}).solutions[0];
    // z_5 = tanh(5 pi / 2) ~ 1 - 3e-7, so the segment has to reach past it.
    const std::vector<double> got = find_zeros_on_segment(f, 0.01, 1.0 - 1e-7);
    const std::vector<double> want = hille_zeros(1.0, 1, 5);
    REQUIRE(got.size() == 5);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-10);

    CHECK(find_zeros_on_segment(gallery_get("power", {{"gamma", 2.0}}).solutions[0], -0.9, 0.9).empty());
  }
}
