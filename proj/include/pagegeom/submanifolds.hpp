#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pagegeom/cartan.hpp"
#include "pagegeom/connection.hpp"
#include "pagegeom/geometry.hpp"
#include "pagegeom/numerics.hpp"

namespace pagegeom {

enum class FamilyId { S1, S2, S3, S4, S5, S6, N1, N2, N3, N4 };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::S1, FamilyId::S2, FamilyId::S3, FamilyId::S4, FamilyId::S5,
                                            FamilyId::S6, FamilyId::N1, FamilyId::N2, FamilyId::N3, FamilyId::N4};

std::string_view to_string(FamilyId id);
FamilyId parse_family(std::string_view name);

/// Default values for coordinates held fixed by a family.
struct FixedDefaults {
  double r0 = 1.5707963267948966;
  double phi0 = 0.0;
  double psi0 = 0.0;
  double theta0 = 1.5707963267948966;

  double value(std::size_t coord) const;
};

struct SubmanifoldSpec {
  FamilyId id;
  std::vector<std::pair<std::size_t, double>> fixed;  ///< (coordinate, value)
  std::vector<std::size_t> free;                      ///< coordinates in parameter order
  std::vector<std::size_t> tangent_frame;             ///< ambient frame indices
  std::string topology;

  std::size_t dim() const { return free.size(); }
  std::string name() const { return std::string(to_string(id)); }
  Vec<double, 4> embed(const std::vector<double>& q) const;
  /// Copy with one fixed coordinate moved.
  SubmanifoldSpec with_fixed(std::size_t coord, double value) const;
  std::optional<double> fixed_value(std::size_t coord) const;
  /// Range of a coordinate in the chart: [0, pi], [0, 2pi) or [0, 4pi).
  static std::pair<double, double> coordinate_range(std::size_t coord);
};

SubmanifoldSpec family(FamilyId id, const FixedDefaults& d = {});
std::vector<SubmanifoldSpec> catalog(const FixedDefaults& d = {});

/// max over tangent vectors d_i of |normal frame components| / |d_i|.
double tangent_span_residual(const PageMetric& m, const SubmanifoldSpec& s, const std::vector<double>& q);

/// Induced metric in the free coordinates.
Eigen::MatrixXd induced_metric(const PageMetric& m, const SubmanifoldSpec& s, const std::vector<double>& q);

struct SecondFundamentalForm {
  /// True when the tangent vectors lie in span{e_t : t in tangent_frame} at
  /// this point. Then tangent and normal bases are ambient frame vectors and
  /// II^n_ts = Gamma^n_ts. Otherwise both bases come from a QR split.
  bool adapted = false;
  std::vector<std::size_t> normal_labels;  ///< ambient frame index if adapted
  std::vector<Eigen::MatrixXd> components;  ///< one dim x dim block per normal

  double max_abs() const;
  double asymmetry() const;
};

SecondFundamentalForm second_fundamental_form(const PageMetric& m, const SubmanifoldSpec& s,
                                              const std::vector<double>& q);

struct TotallyGeodesicResult {
  bool pass = false;
  double max_ii = 0.0;
  double max_asymmetry = 0.0;
  std::size_t samples = 0;
  std::vector<double> worst_point;  ///< ambient coordinates of the largest |II|
};

/// Cell-centred grid of `grid_size` points per free axis (3D capped at 20^3),
/// repeated over a cell-centred grid of `param_grid` values per fixed coordinate.
TotallyGeodesicResult is_totally_geodesic(const PageMetric& m, const SubmanifoldSpec& s, std::size_t grid_size,
                                          double tol, std::size_t param_grid = 7);

/// Same, but the fixed values are held at those in `s`.
TotallyGeodesicResult is_totally_geodesic_at(const PageMetric& m, const SubmanifoldSpec& s, std::size_t grid_size,
                                             double tol);

/// Orthonormal coframe of the induced metric as a function of the free
/// coordinates. Uses the restricted ambient rows when the family is adapted at
/// its fixed values, else the Cholesky factor of the induced metric.
template <std::size_t D>
class InducedCoframe {
 public:
  static constexpr std::size_t dimension = D;

  InducedCoframe(const PageMetric& m, SubmanifoldSpec s, bool adapted) : m_(m), s_(std::move(s)), adapted_(adapted) {}

  bool adapted() const noexcept { return adapted_; }

  template <class T>
  Vec<T, 4> embed(const Vec<T, D>& q) const {
    Vec<T, 4> x{};
    for (const auto& [k, v] : s_.fixed) x[k] = T(v);
    for (std::size_t i = 0; i < D; ++i) x[s_.free[i]] = q[i];
    return x;
  }

  template <class T>
  Mat<T, D> coframe(const Vec<T, D>& q) const {
    const auto x = embed(q);
    Mat<T, D> out{};
    if (adapted_) {
      const auto E = m_.coframe(x);
      for (std::size_t a = 0; a < D; ++a)
        for (std::size_t i = 0; i < D; ++i) out[a][i] = E[s_.tangent_frame[a]][s_.free[i]];
      return out;
    }
    const auto g = m_.metric(x);
    Mat<T, D> gi{};
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) gi[i][j] = g[s_.free[i]][s_.free[j]];
    return cholesky_upper(gi);
  }

 private:
  const PageMetric& m_;
  SubmanifoldSpec s_;
  bool adapted_;
};

/// Whether the restricted ambient rows form a coframe of the induced metric
/// everywhere on the family (checked on a grid at the fixed values).
bool family_is_adapted(const PageMetric& m, const SubmanifoldSpec& s);

struct InducedCurvature {
  std::size_t dim = 0;
  bool adapted = false;
  std::vector<std::size_t> labels;  ///< frame label of each local index
  std::vector<double> riemann;      ///< R^a_bcd, local indices, flattened dim^4
  double scalar = 0.0;
  double torsion_residual = 0.0;

  double R(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return riemann[((a * dim + b) * dim + c) * dim + d];
  }
  /// Gaussian curvature for dim 2.
  double gaussian() const { return R(0, 1, 0, 1); }
  /// Component addressed by frame labels; throws if a label is absent.
  double by_label(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
};

/// Intrinsic curvature from the structure equations of the induced coframe.
/// The point must have a positive-definite induced metric.
InducedCurvature induced_curvature(const PageMetric& m, const SubmanifoldSpec& s, const std::vector<double>& q);

struct GaussBonnetResult {
  double integral = 0.0;
  double error_estimate = 0.0;
  double area = 0.0;
  double mean_curvature_k = 0.0;  ///< mean K over a sample grid
  double curvature_stddev = 0.0;
  std::string method;
};

/// Closedness test: every boundary edge of the parameter rectangle either
/// collapses to a point (zero induced length) or is glued periodically.
bool is_closed_surface(const PageMetric& m, const SubmanifoldSpec& s, double tol = 1e-12);

/// Integral of K dA over the parameter rectangle of a closed 2D family.
/// S5 integrates by adaptive quadrature. S6 multiplies its constant pipeline
/// curvature by the quadrature area. Throws std::invalid_argument on non-closed
/// or non-2D specs.
GaussBonnetResult gauss_bonnet(const PageMetric& m, const SubmanifoldSpec& s, double tol = 1e-10);

struct FormulaComparison {
  std::string component;  ///< e.g. "K" or "R^2_323"
  std::string printed;
  double printed_value = 0.0;
  double computed_value = 0.0;
  double deviation = 0.0;
  Status status = Status::pass;
};

/// Evaluates the printed curvature expressions of a family at q and compares
/// with induced_curvature. Component labels follow the printed frame; for N4
/// the printed labels {0, 2, 3} map positionally onto frame {0, 1, 3}.
std::vector<FormulaComparison> paper_curvature_formula(const PageMetric& m, const SubmanifoldSpec& s,
                                                       const std::vector<double>& q, double tol = 1e-8);

/// Printed radius of the S6 spheres, f^2 / 16, and the pipeline radius 1/sqrt(K).
double printed_s6_radius(const ProfileSet& ps, double r);

}  // namespace pagegeom
