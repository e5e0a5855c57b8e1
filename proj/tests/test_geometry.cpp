#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pagegeom/geometry.hpp"
#include "pagegeom/report.hpp"

using namespace pagegeom;
using std::numbers::pi;

TEST_SUITE("geometry") {
  TEST_CASE("coframe squares to the metric") {
    std::mt19937_64 rng(7);
    for (auto norm : {FiberNormalization::einstein, FiberNormalization::printed}) {
      const PageMetric m(ProfileSet::page(), norm);
      for (int i = 0; i < 50; ++i) {
        const auto p = random_chart_point(rng);
        const auto at = m.at(p);
        REQUIRE(at.E.has_value());
        CHECK((at.E->transpose() * *at.E - at.G).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }

  TEST_CASE("metric components at the equator") {
    const auto printed = PageMetric::page(FiberNormalization::printed);
    const auto& ps = printed.profiles();
    const auto G = printed.at({pi / 2, 0.0, 0.0, pi / 2}).G;
    CHECK(std::abs(G(kPhi, kPsi)) < 1e-15);
    CHECK(G(kPsi, kPsi) == doctest::Approx(ps.C() / (4.0 * ps.V(pi / 2))).epsilon(1e-14));
    CHECK(std::abs(G(kPsi, kPsi) - 0.30800) < 1e-5);
    const auto einstein = PageMetric::page();
    CHECK(einstein.at({pi / 2, 0.0, 0.0, pi / 2}).G(kPsi, kPsi) == doctest::Approx(G(kPsi, kPsi) / 4.0).epsilon(1e-14));
    CHECK(einstein.fiber_constant() == doctest::Approx(ps.C() / 4.0).epsilon(1e-15));
  }

  TEST_CASE("periodicity in phi and psi") {
    const auto m = PageMetric::page();
    const ChartPoint p{1.0, 0.4, 1.1, 0.8};
    const auto G = m.at(p).G;
    const auto shifted = m.metric(Vec<double, 4>{p.r, p.phi + 2 * pi, p.psi + 4 * pi, p.theta});
    CHECK((to_eigen(shifted) - G).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("determinant") {
    std::mt19937_64 rng(11);
    const auto m = PageMetric::page(FiberNormalization::printed);
    for (int i = 0; i < 50; ++i) {
      const auto d = metric_determinant(m, random_chart_point(rng));
      CHECK(std::abs(d.direct - d.closed_form) <= 1e-12 * std::abs(d.closed_form));
      CHECK(d.sqrt_det == doctest::Approx(std::sqrt(d.direct)).epsilon(1e-14));
    }
    const auto eq = metric_determinant(m, {pi / 2, 0.0, 0.0, pi / 2});
    const double f = m.profiles().f(pi / 2);
    CHECK(eq.closed_form == doctest::Approx(m.profiles().C() / 64.0 * f * f).epsilon(1e-14));
    CHECK(std::abs(metric_determinant(m, {0.0, 0.0, 0.0, 1.0}).direct) < 1e-15);
  }

  TEST_CASE("chart and degeneracy checks") {
    CHECK_THROWS_AS(require_in_chart({-0.1, 0.0, 0.0, 1.0}), std::out_of_range);
    CHECK_THROWS_AS(require_in_chart({1.0, 2 * pi, 0.0, 1.0}), std::out_of_range);
    CHECK_THROWS_AS(require_in_chart({1.0, 0.0, 4 * pi, 1.0}), std::out_of_range);
    CHECK_NOTHROW(require_in_chart({0.0, 0.0, 0.0, pi}));
    CHECK(is_degenerate({0.0, 0.0, 0.0, 1.0}));
    CHECK(is_degenerate({1.0, 0.0, 0.0, pi}));
    CHECK_FALSE(is_degenerate({1.0, 0.0, 0.0, 1.0}));
    CHECK_THROWS_AS(require_nondegenerate({1.0, 0.0, 0.0, 1e-9}), std::domain_error);
    CHECK_FALSE(PageMetric::page().at({0.0, 0.0, 0.0, 1.0}).E.has_value());
    CHECK(degeneracy_distance({0.3, 0.0, 0.0, 2.0}) == doctest::Approx(0.3));
  }

  TEST_CASE("left-invariant forms recover the round Hopf structure") {
    const ChartPoint p{1.0, 0.2, 0.9, 1.1};
    const auto s = left_invariant_forms(p);
    // sigma_1^2 + sigma_2^2 = (dtheta^2 + sin^2 theta dphi^2) / 4, sigma_3 = (dpsi + cos theta dphi) / 2.
    double g[4][4] = {};
    for (int a = 1; a <= 2; ++a)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] += s[a][i] * s[a][j];
    CHECK(g[kTheta][kTheta] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(g[kPhi][kPhi] == doctest::Approx(0.25 * std::sin(p.theta) * std::sin(p.theta)).epsilon(1e-14));
    CHECK(std::abs(g[kPhi][kTheta]) < 1e-14);
    CHECK(std::abs(g[kPsi][kPsi]) < 1e-14);
    CHECK(s[3][kPsi] == doctest::Approx(0.5));
    CHECK(s[3][kPhi] == doctest::Approx(0.5 * std::cos(p.theta)));
    CHECK(s[0][kR] == doctest::Approx(1.0));
  }

  TEST_CASE("coordinate Christoffels are symmetric and reproduce the metric derivative") {
    const auto m = PageMetric::page();
    const ChartPoint p{1.2, 0.0, 0.0, 0.9};
    const auto G = coordinate_christoffels(m, p, 1e-5, numerics::Richardson::on);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) CHECK(G[i][j][k] == doctest::Approx(G[i][k][j]).epsilon(1e-12));
    // Gamma^r_thetatheta = -(1/2) g_thth,r / g_rr = -f'/(8V).
    const auto& ps = m.profiles();
    CHECK(G[kR][kTheta][kTheta] == doctest::Approx(-ps.f_dot(p.r) / (8.0 * ps.V(p.r))).epsilon(1e-8));
    CHECK_THROWS(coordinate_christoffels(m, {1e-6, 0.0, 0.0, 1.0}));
  }

  TEST_CASE("normalization parsing") {
    CHECK(parse_normalization("einstein") == FiberNormalization::einstein);
    CHECK(parse_normalization("printed") == FiberNormalization::printed);
    CHECK_THROWS(parse_normalization("other"));
    CHECK(to_string(FiberNormalization::printed) == "printed");
  }
}
