#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>

#include "pagegeom/dual.hpp"
#include "pagegeom/small_matrix.hpp"

namespace pagegeom {

/// A coframe field on an N-dimensional chart: rows e^a over coordinate
/// differentials, evaluable on doubles and on (nested) dual numbers.
template <class C>
concept Coframe = requires(const C& cf, const Vec<double, C::dimension>& x,
                           const Vec<Dual<Dual<double>>, C::dimension>& xx) {
  { C::dimension } -> std::convertible_to<std::size_t>;
  { cf.coframe(x) } -> std::same_as<Mat<double, C::dimension>>;
  { cf.coframe(xx) } -> std::same_as<Mat<Dual<Dual<double>>, C::dimension>>;
};

namespace detail {

template <class C>
constexpr bool depends_on(const C& cf, std::size_t k) {
  if constexpr (requires { cf.depends_on(k); })
    return cf.depends_on(k);
  else
    return true;
}

}  // namespace detail

/// Commutation coefficients from the exterior derivative of the coframe:
///   de^a = -1/2 c^a_mn e^m ^ e^n,
///   c^a_mn = -sum_jk (d_j E^a_k - d_k E^a_j) Einv^j_m Einv^k_n.
template <class T, std::size_t N>
Rank3<T, N> commutation_from_derivatives(const Rank3<T, N>& dE, const Mat<T, N>& Einv) {
  Rank3<T, N> c{};
  for (std::size_t a = 0; a < N; ++a) {
    Mat<T, N> curl{};  // curl[j][k] = d_j E^a_k - d_k E^a_j
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) curl[j][k] = dE[a][k][j] - dE[a][j][k];
    for (std::size_t m = 0; m < N; ++m)
      for (std::size_t n = m + 1; n < N; ++n) {
        T s{};
        for (std::size_t j = 0; j < N; ++j)
          for (std::size_t k = 0; k < N; ++k) s += curl[j][k] * Einv[j][m] * Einv[k][n];
        c[a][m][n] = -s;
        c[a][n][m] = s;
      }
  }
  return c;
}

/// Torsion-free, metric (skew) solution of de^a = -omega^a_b ^ e^b with
/// omega^a_b = Gamma^a_bc e^c:
///   Gamma_amn = -1/2 (c_amn + c_mna - c_nam).
template <class T, std::size_t N>
Rank3<T, N> connection_from_commutation(const Rank3<T, N>& c) {
  Rank3<T, N> g{};
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t m = 0; m < N; ++m)
      for (std::size_t n = 0; n < N; ++n) g[a][m][n] = T(-0.5) * (c[a][m][n] + c[m][n][a] - c[n][a][m]);
  return g;
}

template <class T, std::size_t N>
struct FrameConnection {
  Mat<T, N> E{};
  Mat<T, N> Einv{};
  Rank3<T, N> dE{};    ///< dE[a][j][k] = d_k E^a_j
  Rank3<T, N> c{};     ///< commutation coefficients
  Rank3<T, N> gamma{}; ///< Gamma^a_bc
};

/// Frame connection at x. First derivatives of the coframe come from one
/// forward-mode pass per coordinate, so T = Dual<double> yields the exact
/// coordinate derivative of every output along the seeded direction.
template <Coframe CF, class T>
FrameConnection<T, CF::dimension> frame_connection(const CF& cf, const Vec<T, CF::dimension>& x) {
  constexpr std::size_t N = CF::dimension;
  FrameConnection<T, N> out;
  out.E = cf.coframe(x);
  out.Einv = inverse(out.E);
  for (std::size_t k = 0; k < N; ++k) {
    if (!detail::depends_on(cf, k)) continue;
    Vec<Dual<T>, N> xk{};
    for (std::size_t i = 0; i < N; ++i) xk[i] = Dual<T>(x[i]);
    xk[k].d = T(1.0);
    const auto Ek = cf.coframe(xk);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t j = 0; j < N; ++j) out.dE[a][j][k] = Ek[a][j].d;
  }
  out.c = commutation_from_derivatives(out.dE, out.Einv);
  out.gamma = connection_from_commutation(out.c);
  return out;
}

template <std::size_t N>
struct FrameCurvature {
  FrameConnection<double, N> connection;
  Rank4<double, N> riemann{};  ///< R^a_bmn
  Mat<double, N> ricci{};      ///< Ric_bd = R^a_bad
  double scalar = 0.0;

  /// K(e_m, e_n) = R^m_nmn.
  double sectional(std::size_t m, std::size_t n) const { return riemann[m][n][m][n]; }
};

/// Curvature 2-forms R^a_b = d omega^a_b + omega^a_c ^ omega^c_b in components.
/// d omega uses the exact coordinate derivative of Gamma from a nested dual pass.
template <Coframe CF>
FrameCurvature<CF::dimension> frame_curvature(const CF& cf, const Vec<double, CF::dimension>& x) {
  constexpr std::size_t N = CF::dimension;
  FrameCurvature<N> out;
  out.connection = frame_connection(cf, x);
  const auto& G = out.connection.gamma;
  const auto& c = out.connection.c;
  const auto& Einv = out.connection.Einv;

  // dG[k][a][b][n] = d_k Gamma^a_bn
  std::array<Rank3<double, N>, N> dG{};
  for (std::size_t k = 0; k < N; ++k) {
    if (!detail::depends_on(cf, k)) continue;
    Vec<Dual<double>, N> xk{};
    for (std::size_t i = 0; i < N; ++i) xk[i] = Dual<double>(x[i]);
    xk[k].d = 1.0;
    const auto conn = frame_connection(cf, xk);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t n = 0; n < N; ++n) dG[k][a][b][n] = conn.gamma[a][b][n].d;
  }
  // eG[m][a][b][n] = e_m(Gamma^a_bn)
  std::array<Rank3<double, N>, N> eG{};
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t k = 0; k < N; ++k) {
      const double w = Einv[k][m];
      if (w == 0.0) continue;
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          for (std::size_t n = 0; n < N; ++n) eG[m][a][b][n] += w * dG[k][a][b][n];
    }

  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t m = 0; m < N; ++m)
        for (std::size_t n = 0; n < N; ++n) {
          double s = eG[m][a][b][n] - eG[n][a][b][m];
          for (std::size_t e = 0; e < N; ++e) {
            s -= G[a][b][e] * c[e][m][n];
            s += G[a][e][m] * G[e][b][n] - G[a][e][n] * G[e][b][m];
          }
          out.riemann[a][b][m][n] = s;
        }
  for (std::size_t b = 0; b < N; ++b)
    for (std::size_t d = 0; d < N; ++d) {
      double s = 0.0;
      for (std::size_t a = 0; a < N; ++a) s += out.riemann[a][b][a][d];
      out.ricci[b][d] = s;
    }
  for (std::size_t b = 0; b < N; ++b) out.scalar += out.ricci[b][b];
  return out;
}

/// max |Gamma^a_bc + Gamma^b_ac|
template <std::size_t N>
double skew_residual(const Rank3<double, N>& gamma) {
  double r = 0.0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t c = 0; c < N; ++c) r = std::max(r, std::abs(gamma[a][b][c] + gamma[b][a][c]));
  return r;
}

/// max over coordinate components of de^a + omega^a_b ^ e^b, where de^a is
/// rebuilt from the coframe derivatives and omega from Gamma.
template <std::size_t N>
double torsion_residual(const FrameConnection<double, N>& fc) {
  // om[a][b][j] = omega^a_b(d_j)
  Rank3<double, N> om{};
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t j = 0; j < N; ++j) {
        double s = 0.0;
        for (std::size_t c = 0; c < N; ++c) s += fc.gamma[a][b][c] * fc.E[c][j];
        om[a][b][j] = s;
      }
  double r = 0.0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) {
        double s = fc.dE[a][k][j] - fc.dE[a][j][k];
        for (std::size_t b = 0; b < N; ++b) s += om[a][b][j] * fc.E[b][k] - om[a][b][k] * fc.E[b][j];
        r = std::max(r, std::abs(s));
      }
  return r;
}

struct CurvatureSymmetryResiduals {
  double antisymmetry = 0.0;  ///< R^a_bmn + R^a_bnm
  double pair_skew = 0.0;     ///< R_abmn + R_bamn
  double bianchi = 0.0;       ///< R^a_bmn + R^a_mnb + R^a_nbm
  double ricci_symmetry = 0.0;
};

template <std::size_t N>
CurvatureSymmetryResiduals symmetry_residuals(const FrameCurvature<N>& k) {
  CurvatureSymmetryResiduals out;
  const auto& R = k.riemann;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t m = 0; m < N; ++m)
        for (std::size_t n = 0; n < N; ++n) {
          out.antisymmetry = std::max(out.antisymmetry, std::abs(R[a][b][m][n] + R[a][b][n][m]));
          out.pair_skew = std::max(out.pair_skew, std::abs(R[a][b][m][n] + R[b][a][m][n]));
          out.bianchi = std::max(out.bianchi, std::abs(R[a][b][m][n] + R[a][m][n][b] + R[a][n][b][m]));
        }
  for (std::size_t b = 0; b < N; ++b)
    for (std::size_t d = 0; d < N; ++d)
      out.ricci_symmetry = std::max(out.ricci_symmetry, std::abs(k.ricci[b][d] - k.ricci[d][b]));
  return out;
}

}  // namespace pagegeom
