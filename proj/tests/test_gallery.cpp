#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "discode/errors.hpp"
#include "discode/gallery.hpp"

using namespace discode;

TEST_SUITE("gallery") {
  TEST_CASE("names") {
    const std::vector<std::string> n = gallery_names();
    for (const char* want : {"hille", "power", "exp_singular", "log_power", "loglog_power", "zero", "constant"}) {
      CHECK(std::find(n.begin(), n.end(), want) != n.end());
    }
    CHECK_THROWS_AS(gallery_get("nosuch"), DomainError);
    CHECK_THROWS_AS(gallery_get("power", {{"gamma", 0.5}}), DomainError);
    CHECK_THROWS_AS(gallery_get("log_power", {{"alpha", 1.5}}), DomainError);
  }

  TEST_CASE("entries") {
    const GalleryEntry z = gallery_get("zero");
    REQUIRE(z.solutions.size() == 2);
    CHECK(std::abs(z.solutions[0](0.4) - 1.0) < 1e-15);
    CHECK(std::abs(z.solutions[1](0.4) - 0.4) < 1e-15);

    const GalleryEntry h = gallery_get("hille", {{"gamma", 1.0}});
    const bool has_zero_fact =
        std::any_of(h.facts.begin(), h.facts.end(), [](const Fact& f) { return f.id == "zeros"; });
    CHECK(has_zero_fact);

    const GalleryEntry p = gallery_get("power", {{"gamma", 2.0}});
    CHECK(std::abs(p.solutions[0](0.0) - 1.0) < 1e-15);
    CHECK(std::abs(diff(p.solutions[0])(0.0) - 2.0) < 1e-14);
  }

  TEST_CASE("verification") {
    for (const std::string& n : gallery_names()) {
      CAPTURE(n);
      const VerifyReport r = gallery_verify(gallery_get(n));
      CHECK(r.passed);
    }
    const VerifyReport h = gallery_verify(gallery_get("hille", {{"gamma", 1.0}}));
    const bool zeros_checked =
        std::any_of(h.items.begin(), h.items.end(), [](const VerifyItem& i) { return i.id == "zeros" && i.passed; });
    CHECK(zeros_checked);
    const VerifyReport e = gallery_verify(gallery_get("exp_singular"));
    const bool grows = std::any_of(e.items.begin(), e.items.end(),
                                   [](const VerifyItem& i) { return i.id == "companion_growth" && i.passed; });
    CHECK(grows);
  }

  TEST_CASE("parameters") {
    for (double g : {0.5, 1.0, 2.5}) CHECK(gallery_verify(gallery_get("hille", {{"gamma", g}})).passed);
    for (double g : {1.5, 3.0}) CHECK(gallery_verify(gallery_get("power", {{"gamma", g}})).passed);
    CHECK(gallery_verify(gallery_get("constant", {{"c", -2.0}})).passed);
  }
}
