#include "pagegeom/oracles.hpp"

#include <stdexcept>

namespace pagegeom::oracles {

double brioschi_curvature(const Metric2D& g, double u, double v, double h) {
  const Eigen::Matrix2d g0 = g(u, v);
  const Eigen::Matrix2d gup = g(u + h, v);
  const Eigen::Matrix2d gum = g(u - h, v);
  const Eigen::Matrix2d gvp = g(u, v + h);
  const Eigen::Matrix2d gvm = g(u, v - h);
  const Eigen::Matrix2d gpp = g(u + h, v + h);
  const Eigen::Matrix2d gpm = g(u + h, v - h);
  const Eigen::Matrix2d gmp = g(u - h, v + h);
  const Eigen::Matrix2d gmm = g(u - h, v - h);

  const double E = g0(0, 0), F = g0(0, 1), G = g0(1, 1);
  const double Eu = (gup(0, 0) - gum(0, 0)) / (2 * h);
  const double Ev = (gvp(0, 0) - gvm(0, 0)) / (2 * h);
  const double Fu = (gup(0, 1) - gum(0, 1)) / (2 * h);
  const double Fv = (gvp(0, 1) - gvm(0, 1)) / (2 * h);
  const double Gu = (gup(1, 1) - gum(1, 1)) / (2 * h);
  const double Gv = (gvp(1, 1) - gvm(1, 1)) / (2 * h);
  const double Evv = (gvp(0, 0) - 2 * E + gvm(0, 0)) / (h * h);
  const double Guu = (gup(1, 1) - 2 * G + gum(1, 1)) / (h * h);
  const double Fuv = (gpp(0, 1) - gpm(0, 1) - gmp(0, 1) + gmm(0, 1)) / (4 * h * h);

  Eigen::Matrix3d m1;
  m1 << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
        Fv - 0.5 * Gu, E, F,
        0.5 * Gv, F, G;
  Eigen::Matrix3d m2;
  m2 << 0.0, 0.5 * Ev, 0.5 * Gu,
        0.5 * Ev, E, F,
        0.5 * Gu, F, G;
  const double det = E * G - F * F;
  return (m1.determinant() - m2.determinant()) / (det * det);
}

double brioschi_curvature(const PageMetric& m, const SubmanifoldSpec& s, const std::vector<double>& q, double h) {
  if (s.dim() != 2) throw std::invalid_argument("brioschi_curvature: surface families only");
  const auto metric = [&](double u, double v) -> Eigen::Matrix2d {
    Vec<double, 4> x = s.embed({u, v});
    const auto G = m.metric(x);
    Eigen::Matrix2d g;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g(i, j) = G[s.free[i]][s.free[j]];
    return g;
  };
  return brioschi_curvature(metric, q[0], q[1], h);
}

}  // namespace pagegeom::oracles
