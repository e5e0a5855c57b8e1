#include "pagegeom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pagegeom {

using std::numbers::pi;

void require_in_chart(const ChartPoint& p) {
  if (!(p.r >= 0.0 && p.r <= pi)) throw std::out_of_range("chart point: r outside [0, pi]");
  if (!(p.theta >= 0.0 && p.theta <= pi)) throw std::out_of_range("chart point: theta outside [0, pi]");
  if (!(p.phi >= 0.0 && p.phi < 2.0 * pi)) throw std::out_of_range("chart point: phi outside [0, 2pi)");
  if (!(p.psi >= 0.0 && p.psi < 4.0 * pi)) throw std::out_of_range("chart point: psi outside [0, 4pi)");
}

double degeneracy_distance(const ChartPoint& p) {
  return std::min({p.r, pi - p.r, p.theta, pi - p.theta});
}

bool is_degenerate(const ChartPoint& p, double margin) { return degeneracy_distance(p) <= margin; }

void require_nondegenerate(const ChartPoint& p, double margin) {
  if (is_degenerate(p, margin))
    throw std::domain_error("chart point within " + std::to_string(margin) + " of a degenerate locus");
}

std::string_view to_string(FiberNormalization n) {
  return n == FiberNormalization::einstein ? "einstein" : "printed";
}

FiberNormalization parse_normalization(std::string_view s) {
  if (s == "einstein") return FiberNormalization::einstein;
  if (s == "printed") return FiberNormalization::printed;
  throw std::invalid_argument("unknown normalization '" + std::string(s) + "'");
}

PageMetric::PageMetric(ProfileSet profiles, FiberNormalization n)
    : ps_(profiles),
      norm_(n),
      fiber_(n == FiberNormalization::einstein ? profiles.C() / 4.0 : profiles.C()),
      D_(std::sqrt(fiber_)) {}

PageMetric PageMetric::page(FiberNormalization n) { return PageMetric(ProfileSet::page(), n); }

Eigen::Matrix4d to_eigen(const Mat<double, 4>& m) {
  Eigen::Matrix4d out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m[i][j];
  return out;
}

MetricAtPoint PageMetric::at(const ChartPoint& p) const {
  require_in_chart(p);
  MetricAtPoint out{to_eigen(metric(p.coords())), std::nullopt};
  if (!is_degenerate(p)) out.E = to_eigen(coframe(p.coords()));
  return out;
}

DeterminantReport metric_determinant(const PageMetric& m, const ChartPoint& p) {
  require_in_chart(p);
  const double direct = to_eigen(m.metric(p.coords())).determinant();
  const double f = m.profiles().f(p.r);
  const double sr = std::sin(p.r);
  const double st = std::sin(p.theta);
  const double closed = m.fiber_constant() / 64.0 * f * f * sr * sr * st * st;
  return {direct, closed, std::sqrt(std::max(direct, 0.0))};
}

Mat<double, 4> left_invariant_forms(const ChartPoint& p) {
  const double sp = std::sin(p.psi);
  const double cp = std::cos(p.psi);
  const double st = std::sin(p.theta);
  const double ct = std::cos(p.theta);
  Mat<double, 4> s{};
  s[1][kTheta] = 0.5 * sp;
  s[1][kPhi] = -0.5 * st * cp;
  s[2][kTheta] = -0.5 * cp;
  s[2][kPhi] = -0.5 * st * sp;
  s[3][kPsi] = 0.5;
  s[3][kPhi] = 0.5 * ct;
  // Row 0 is dr, so that rows 1..3 line up with the sigma indices.
  s[0][kR] = 1.0;
  return s;
}

Rank3<double, 4> coordinate_christoffels(const PageMetric& m, const ChartPoint& p, double h,
                                         numerics::Richardson richardson) {
  require_in_chart(p);
  require_nondegenerate(p, std::max(2.0 * h, kDegeneracyMargin));
  const auto x0 = p.coords();

  // dg[l][i][j] = d_l g_ij
  Rank3<double, 4> dg{};
  for (std::size_t l = 0; l < 4; ++l) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) {
        const auto component = [&](double t) {
          auto x = x0;
          x[l] = t;
          return m.metric(x)[i][j];
        };
        const double d = numerics::central_difference(component, x0[l], 1, h, richardson);
        dg[l][i][j] = d;
        dg[l][j][i] = d;
      }
    }
  }

  const Eigen::Matrix4d ginv = to_eigen(m.metric(x0)).inverse();
  Rank3<double, 4> gamma{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = j; k < 4; ++k) {
        double s = 0.0;
        for (std::size_t l = 0; l < 4; ++l) s += ginv(i, l) * (dg[j][l][k] + dg[k][l][j] - dg[l][j][k]);
        gamma[i][j][k] = 0.5 * s;
        gamma[i][k][j] = 0.5 * s;
      }
  return gamma;
}

}  // namespace pagegeom
