#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "pagegeom/numerics.hpp"
#include "pagegeom/profiles.hpp"

using namespace pagegeom::numerics;
using std::numbers::pi;

TEST_SUITE("numerics") {
  TEST_CASE("find_root on known roots") {
    const double r2 = find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-12);
    CHECK(std::abs(r2 - std::sqrt(2.0)) < 1e-12);

    const double r0 = find_root([](double x) { return x * x * x; }, -1.0, 2.0, 1e-12);
    CHECK(std::abs(r0 * r0 * r0) < 1e-12);
    CHECK(r0 >= -1.0);
    CHECK(r0 <= 2.0);

    const double rn = find_root([](double x) { return std::cos(x) - x; }, [](double x) { return -std::sin(x) - 1.0; }, 0.0,
                                1.0, 1e-14);
    CHECK(std::abs(std::cos(rn) - rn) < 1e-14);
  }

  TEST_CASE("find_root rejects brackets without a sign change") {
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), NoSignChange);
  }

  TEST_CASE("find_root is deterministic") {
    const auto f = [](double x) { return pagegeom::page_quartic(x); };
    const double a = find_root(f, 0.0, 1.0, 1e-13);
    const double b = find_root(f, 0.0, 1.0, 1e-13);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }

  TEST_CASE("integrate_1d") {
    const auto s = integrate_1d([](double x) { return std::sin(x); }, 0.0, pi, 1e-12);
    CHECK(std::abs(s.value - 2.0) < 1e-10);
    CHECK(s.error_estimate >= 0.0);
    CHECK(s.evaluations > 0);

    // Simpson is exact on cubics.
    const auto c = integrate_1d([](double x) { return 4.0 * x * x * x - 3.0 * x * x + x - 7.0; }, -1.0, 2.0, 1e-6);
    CHECK(c.value == doctest::Approx(15.0 - 9.0 + 1.5 - 21.0).epsilon(1e-15));
  }

  TEST_CASE("integrate_1d reports the partial value at the depth limit") {
    const auto f = [](double x) { return std::pow(std::abs(x - 0.3), 0.1); };
    try {
      (void)integrate_1d(f, 0.0, 1.0, 1e-15, 6);
      FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
      CHECK(e.partial().evaluations > 0);
      CHECK(std::isfinite(e.partial().value));
    }
  }

  TEST_CASE("integrate_2d") {
    const auto s = integrate_2d([](double x, double y) { return std::sin(x) * std::sin(y); }, {0.0, pi, 0.0, pi}, 1e-11);
    CHECK(std::abs(s.value - 4.0) < 1e-9);
    CHECK(s.error_estimate >= 0.0);
  }

  TEST_CASE("central_difference") {
    const auto sin_fn = [](double x) { return std::sin(x); };
    CHECK(std::abs(central_difference(sin_fn, 0.0, 1, 1e-3, Richardson::on) - 1.0) < 1e-10);
    const auto quartic = [](double x) { return x * x * x * x; };
    CHECK(std::abs(central_difference(quartic, 1.0, 2, 1e-3) - 12.0) < 1e-5);
    CHECK(std::abs(central_difference(quartic, 1.0, 2, 1e-3, Richardson::on) - 12.0) < 1e-6);
    CHECK_THROWS(central_difference(quartic, 1.0, 3, 1e-3));
  }

  TEST_CASE("golden section and scans") {
    const auto g = golden_section_minimize([](double x) { return (x - 0.7) * (x - 0.7) + 1.0; }, 0.0, 2.0);
    CHECK(g.x == doctest::Approx(0.7).epsilon(1e-6));
    CHECK(g.value == doctest::Approx(1.0).epsilon(1e-12));

    const auto m = scan_maximize([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(m.x == doctest::Approx(pi / 2).epsilon(1e-6));

    // Endpoint minima are returned as such.
    const auto e = scan_minimize([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(std::min(std::abs(e.x), std::abs(e.x - pi)) < 1e-9);
  }
}
