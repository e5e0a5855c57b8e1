#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "pagegeom/numerics.hpp"
#include "pagegeom/profiles.hpp"
#include "pagegeom/small_matrix.hpp"

namespace pagegeom {

/// Euler-chart point. Coordinate index order everywhere is (r, phi, psi, theta).
struct ChartPoint {
  double r = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  double theta = 0.0;

  Vec<double, 4> coords() const { return {r, phi, psi, theta}; }
  static ChartPoint from(const Vec<double, 4>& x) { return {x[0], x[1], x[2], x[3]}; }
};

enum Coord : std::size_t { kR = 0, kPhi = 1, kPsi = 2, kTheta = 3 };

inline constexpr double kDegeneracyMargin = 1e-6;

/// Throws std::out_of_range outside r, theta in [0, pi], phi in [0, 2pi), psi in [0, 4pi).
void require_in_chart(const ChartPoint& p);
/// Distance of p from the loci r, theta in {0, pi}.
double degeneracy_distance(const ChartPoint& p);
bool is_degenerate(const ChartPoint& p, double margin = kDegeneracyMargin);
/// Throws std::domain_error when p is within `margin` of a degenerate locus.
void require_nondegenerate(const ChartPoint& p, double margin = kDegeneracyMargin);

/// Coefficient in front of sin^2 r / (4V) on the Hopf fiber.
///   printed:  C, exactly as in the displayed Euler-coordinate metric.
///   einstein: C/4, the normalization that makes Ric = 3(1 + a^2) g.
enum class FiberNormalization { einstein, printed };

std::string_view to_string(FiberNormalization n);
FiberNormalization parse_normalization(std::string_view s);

struct MetricAtPoint {
  Eigen::Matrix4d G;
  /// Rows are e^a in (dr, dphi, dpsi, dtheta). Empty at degenerate points.
  std::optional<Eigen::Matrix4d> E;
};

/// The Page metric with vierbein
///   e0 = U dr, e1 = (h/2) sin(theta) dphi, e2 = W (dpsi + cos(theta) dphi), e3 = (h/2) dtheta,
/// W = D sin(r) / (2U), D = sqrt(fiber constant).
class PageMetric {
 public:
  static constexpr std::size_t dimension = 4;

  explicit PageMetric(ProfileSet profiles, FiberNormalization n = FiberNormalization::einstein);
  static PageMetric page(FiberNormalization n = FiberNormalization::einstein);

  const ProfileSet& profiles() const noexcept { return ps_; }
  FiberNormalization normalization() const noexcept { return norm_; }
  double fiber_constant() const noexcept { return fiber_; }
  double D() const noexcept { return D_; }

  /// Only r and theta enter the components; phi and psi are Killing.
  static constexpr bool depends_on(std::size_t k) { return k == kR || k == kTheta; }

  template <class T>
  Mat<T, 4> coframe(const Vec<T, 4>& x) const {
    using std::cos;
    using std::sin;
    using std::sqrt;
    const T& r = x[kR];
    const T& th = x[kTheta];
    const T u = sqrt(ps_.V(r));
    const T hh = sqrt(ps_.f(r));
    const T w = D_ * sin(r) / (T(2.0) * u);
    Mat<T, 4> e{};
    e[0][kR] = u;
    e[1][kPhi] = T(0.5) * hh * sin(th);
    e[2][kPsi] = w;
    e[2][kPhi] = w * cos(th);
    e[3][kTheta] = T(0.5) * hh;
    return e;
  }

  template <class T>
  Mat<T, 4> metric(const Vec<T, 4>& x) const {
    using std::cos;
    using std::sin;
    const T& r = x[kR];
    const T& th = x[kTheta];
    const T v = ps_.V(r);
    const T ff = ps_.f(r);
    const T s = sin(r);
    const T fiber = T(fiber_) * s * s / (T(4.0) * v);
    const T st = sin(th);
    const T ct = cos(th);
    Mat<T, 4> g{};
    g[kR][kR] = v;
    g[kPhi][kPhi] = T(0.25) * ff * st * st + fiber * ct * ct;
    g[kPsi][kPsi] = fiber;
    g[kPhi][kPsi] = fiber * ct;
    g[kPsi][kPhi] = fiber * ct;
    g[kTheta][kTheta] = T(0.25) * ff;
    return g;
  }

  MetricAtPoint at(const ChartPoint& p) const;

 private:
  ProfileSet ps_;
  FiberNormalization norm_;
  double fiber_;
  double D_;
};

Eigen::Matrix4d to_eigen(const Mat<double, 4>& m);

struct DeterminantReport {
  double direct;       ///< det G by LU
  double closed_form;  ///< (K/64) f^2 sin^2 r sin^2 theta, K the fiber constant
  double sqrt_det;     ///< sqrt(det G), the Riemannian volume density
};

DeterminantReport metric_determinant(const PageMetric& m, const ChartPoint& p);

/// Left-invariant forms sigma_1..3 on S^3 as rows over (dr, dphi, dpsi, dtheta).
Mat<double, 4> left_invariant_forms(const ChartPoint& p);

/// Coordinate Christoffel symbols Gamma^i_jk from central differences of the
/// metric components. Independent of the frame pipeline; used as an oracle.
/// Requires p to be at least max(2h, 1e-6) away from the degenerate loci.
Rank3<double, 4> coordinate_christoffels(const PageMetric& m, const ChartPoint& p, double h = 1e-5,
                                         numerics::Richardson richardson = numerics::Richardson::off);

}  // namespace pagegeom
