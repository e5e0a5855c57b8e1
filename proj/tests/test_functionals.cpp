#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pagegeom/functionals.hpp"

using namespace pagegeom;
using std::numbers::pi;

TEST_SUITE("functionals") {
  TEST_CASE("closed-form volume") {
    const auto ps = ProfileSet::page();
    const double a2 = ps.a() * ps.a();
    const double P = 3 + 6 * a2 - a2 * a2;
    const double closed = std::pow(pi, 4) / 4 * (a2 * a2 - 4 * a2 + 16) / ((a2 + 3) * (a2 + 3) * P * P);
    CHECK(page_volume(ps, VolumeMethod::closed) == doctest::Approx(closed).epsilon(1e-15));
    CHECK(page_volume(ps, VolumeMethod::closed) == doctest::Approx(3.3465192910671924).epsilon(1e-14));
  }

  TEST_CASE("integrated printed density") {
    // Separable: (C/64) 8 pi^2 (pi/2) int f^2 sin^2 r dr, and int f^2 sin^2 r = pi (a^4 - 4a^2 + 8) / P^2.
    const auto ps = ProfileSet::page();
    const double a2 = ps.a() * ps.a();
    const double P = ps.P();
    const double exact = ps.C() / 64 * 8 * pi * pi * (pi / 2) * pi * (a2 * a2 - 4 * a2 + 8) / (P * P);
    const auto q = page_volume_quadrature(ps);
    CHECK(q.value == doctest::Approx(exact).epsilon(1e-11));
    CHECK(q.value == doctest::Approx(1.6400772689700176).epsilon(1e-11));
    CHECK(q.error_estimate >= 0.0);
    // The closed form and the integrated density differ by this ratio.
    CHECK(page_volume(ps, VolumeMethod::closed) / q.value ==
          doctest::Approx((a2 * a2 - 4 * a2 + 16) / (a2 * a2 - 4 * a2 + 8)).epsilon(1e-10));
  }

  TEST_CASE("Riemannian volume") {
    // int sqrt(det g) = 8 pi^2 sqrt(K) (2 - 2a^2/3) / P with K the fiber constant.
    for (auto norm : {FiberNormalization::einstein, FiberNormalization::printed}) {
      const PageMetric m(ProfileSet::page(), norm);
      const double a2 = m.profiles().a2();
      const double exact = 8 * pi * pi * std::sqrt(m.fiber_constant()) * (2 - 2 * a2 / 3) / m.profiles().P();
      CHECK(metric_volume(m).value == doctest::Approx(exact).epsilon(1e-10));
    }
    CHECK(metric_volume(PageMetric::page()).value == doctest::Approx(14.388256021130735).epsilon(1e-10));
  }

  TEST_CASE("Einstein-Hilbert functional") {
    const auto ps = ProfileSet::page();
    CHECK(page_scalar_curvature(ps) == doctest::Approx(12 * (1 + ps.a() * ps.a())).epsilon(1e-15));
    const auto eh = einstein_hilbert_page(ps);
    CHECK(std::abs(eh.from_volume - eh.closed_form) < 1e-10 * eh.closed_form);
    CHECK(eh.from_volume == doctest::Approx(23.694226138775797).epsilon(1e-12));
    const auto b = reference_bounds();
    CHECK(b.aubin == doctest::Approx(61.562393).epsilon(1e-7));
    CHECK(b.conjectured == doctest::Approx(53.314598).epsilon(1e-7));
    CHECK(eh.from_volume < b.conjectured);
    CHECK(b.conjectured < b.aubin);
  }

  TEST_CASE("Otoba action") {
    CHECK(otoba_action(8.0) == doctest::Approx(8 * std::pow(2.0, 0.25) * std::pow(pi, 1.5)).epsilon(1e-14));
    const auto t8 = otoba_terms(8.0);
    CHECK(t8.beta == 0.0);
    CHECK(t8.k2 == 0.5);
    for (double R : {-100.0, 0.0, 8.0, 100.0, -1e4, 1e4}) {
      const auto t = otoba_terms(R);
      CHECK(t.k2 > 0.0);
      CHECK(t.k2 < 1.0);
    }
    CHECK(otoba_action(1e-4) < 1e-2);
    CHECK(otoba_action(0.0) == 0.0);
    CHECK(otoba_action(-3.0) < 0.0);
    // Large R: E ~ 2 pi sqrt(2 R), so E(1e4) stays below 1e3.
    CHECK(otoba_action(1e4) == doctest::Approx(888.93).epsilon(1e-4));
    CHECK(otoba_action(1e6) > 1e3);
  }

  TEST_CASE("stable k^2 for large positive R") {
    for (double R : {20.0, 1e3, 1e5}) {
      const double beta = (8 - R) / 2;
      const double naive = 0.5 * (1 + beta / std::sqrt(2 + beta * beta));
      CHECK(otoba_terms(R).k2 == doctest::Approx(naive).epsilon(R > 1e4 ? 1e-4 : 1e-10));
    }
    CHECK(otoba_terms(1e9).k2 > 0.0);
  }

  TEST_CASE("report") {
    const auto rep = functional_report(PageMetric::page(), {1.0, 8.0});
    CHECK(rep.volume_closed == doctest::Approx(3.3465192910671924));
    CHECK(rep.otoba_samples.size() == 2);
    CHECK(rep.otoba_samples[1].second == doctest::Approx(otoba_action(8.0)));
    CHECK(rep.einstein_hilbert == doctest::Approx(rep.scalar_curvature * std::sqrt(rep.volume_closed)).epsilon(1e-14));
  }
}
