#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pagegeom/numerics.hpp"
#include "pagegeom/profiles.hpp"

using namespace pagegeom;
using std::numbers::pi;

namespace {

// Plain bisection, independent of find_root.
double bisect_quartic() {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = mid * mid * mid * mid + 4 * mid * mid * mid - 6 * mid * mid + 12 * mid - 3;
    (fm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double fd(const std::function<double(double)>& f, double r, int order) {
  return numerics::central_difference(f, r, order, order == 1 ? 1e-4 : 1e-3, numerics::Richardson::on);
}

}  // namespace

TEST_SUITE("profiles") {
  TEST_CASE("Page constant") {
    const double a = solve_page_constant();
    CHECK(std::abs(page_quartic(a)) < 1e-12);
    CHECK(std::abs(a - bisect_quartic()) < 1e-13);
    CHECK(a == doctest::Approx(0.28170155790877316).epsilon(1e-14));
    CHECK(std::abs(a - 0.28170) < 5e-6);
    const double eps = 1e-7;
    CHECK(page_quartic_derivative(a) ==
          doctest::Approx((page_quartic(a + eps) - page_quartic(a - eps)) / (2 * eps)).epsilon(1e-7));
  }

  TEST_CASE("C and the profile values at the caption points") {
    const auto ps = ProfileSet::page();
    const double a2 = ps.a() * ps.a();
    CHECK(ps.C() == doctest::Approx(4.0 / ((3.0 + a2) * (3.0 + a2))).epsilon(1e-15));
    CHECK(std::abs(ps.C() - 0.42183) < 5e-6);
    CHECK(std::abs(ps.V(pi / 2) - 0.342397) < 1e-4);
    CHECK(std::abs(ps.f(pi / 2) - 1.152811) < 1e-4);
    CHECK(std::abs(ps.V(0.0) - 0.324776) < 5e-4);
    CHECK(std::abs(ps.f(0.0) - 1.061462) < 5e-4);
    // Direct values at the solved constant.
    CHECK(ps.V(0.0) == doctest::Approx((1 - a2) / (3 - a2 - a2 * (1 + a2))).epsilon(1e-15));
    CHECK(ps.V(pi / 2) == doctest::Approx(1.0 / (3.0 - a2)).epsilon(1e-15));
    CHECK(ps.f(pi / 2) == doctest::Approx(4.0 / ps.P()).epsilon(1e-15));
  }

  TEST_CASE("closed-form derivatives match finite differences") {
    const auto ps = ProfileSet::page();
    for (double r : {0.1, 0.6, pi / 3, 1.4, 2.2, 3.0}) {
      CAPTURE(r);
      CHECK(std::abs(ps.V_dot(r) - fd([&](double x) { return ps.V(x); }, r, 1)) < 1e-7);
      CHECK(std::abs(ps.f_dot(r) - fd([&](double x) { return ps.f(x); }, r, 1)) < 1e-7);
      CHECK(std::abs(ps.V_ddot(r) - fd([&](double x) { return ps.V(x); }, r, 2)) < 1e-6);
      CHECK(std::abs(ps.f_ddot(r) - fd([&](double x) { return ps.f(x); }, r, 2)) < 1e-6);
      CHECK(std::abs(ps.U_dot(r) - fd([&](double x) { return ps.U(x); }, r, 1)) < 1e-7);
      CHECK(std::abs(ps.h_dot(r) - fd([&](double x) { return ps.h(x); }, r, 1)) < 1e-7);
      CHECK(std::abs(ps.U_ddot(r) - fd([&](double x) { return ps.U(x); }, r, 2)) < 1e-6);
      CHECK(std::abs(ps.h_ddot(r) - fd([&](double x) { return ps.h(x); }, r, 2)) < 1e-6);
    }
  }

  TEST_CASE("reflection symmetry and critical point at pi/2") {
    const auto ps = ProfileSet::page();
    for (double r : {0.0, 0.3, 1.0, 1.5}) {
      CHECK(ps.V(r) == doctest::Approx(ps.V(pi - r)).epsilon(1e-14));
      CHECK(ps.f(r) == doctest::Approx(ps.f(pi - r)).epsilon(1e-14));
    }
    CHECK(std::abs(ps.eval(Profile::V, pi / 2, 1)) < 1e-15);
    CHECK(std::abs(ps.eval(Profile::f, pi / 2, 1)) < 1e-15);
  }

  TEST_CASE("extrema") {
    const auto ps = ProfileSet::page();
    const auto v = profile_extrema(ps, Profile::V);
    CHECK(v.argmax == doctest::Approx(pi / 2).epsilon(1e-6));
    CHECK(std::abs(v.max - 0.342397) < 1e-4);
    CHECK(std::min(v.argmin, pi - v.argmin) < 1e-6);
    CHECK(v.min == doctest::Approx(ps.V(0.0)).epsilon(1e-14));
    const auto f = profile_extrema(ps, Profile::f);
    CHECK(std::min(f.argmin, pi - f.argmin) < 1e-6);
    CHECK(f.max == doctest::Approx(4.0 / ps.P()).epsilon(1e-12));
  }

  TEST_CASE("eval and parse reject invalid input") {
    const auto ps = ProfileSet::page();
    CHECK_THROWS_AS(ps.eval(Profile::V, 1.0, 3), std::out_of_range);
    CHECK_THROWS_AS(ps.eval(Profile::V, -0.1, 0), std::out_of_range);
    CHECK_THROWS_AS(ps.eval(Profile::f, 3.2, 0), std::out_of_range);
    CHECK(parse_profile("V") == Profile::V);
    CHECK(parse_profile("f") == Profile::f);
    CHECK_THROWS(parse_profile("W"));
  }
}
