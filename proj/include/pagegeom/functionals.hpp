#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "pagegeom/geometry.hpp"
#include "pagegeom/numerics.hpp"
#include "pagegeom/profiles.hpp"

namespace pagegeom {

enum class VolumeMethod { closed, quadrature };

/// closed:     pi^4/4 (a^4 - 4a^2 + 16) / ((a^2 + 3)^2 (3 + 6a^2 - a^4)^2)
/// quadrature: 8 pi^2 * integral over (r, theta) of (C/64) f^2 sin^2 r sin^2 theta
double page_volume(const ProfileSet& ps, VolumeMethod method, double tol = 1e-12);
numerics::QuadratureResult page_volume_quadrature(const ProfileSet& ps, double tol = 1e-12);

/// Riemannian volume: 8 pi^2 * integral of sqrt(det G) over (r, theta).
numerics::QuadratureResult metric_volume(const PageMetric& m, double tol = 1e-12);

/// 12 (1 + a^2).
double page_scalar_curvature(const ProfileSet& ps);

struct EinsteinHilbert {
  double from_volume;   ///< R_scal * sqrt(closed volume)
  double closed_form;   ///< 6 (1 + a^2) pi^2 sqrt(a^4 - 4a^2 + 16) / ((a^2 + 3)(3 + 6a^2 - a^4))
};
EinsteinHilbert einstein_hilbert_page(const ProfileSet& ps);

struct ReferenceBounds {
  double aubin;        ///< 24 pi sqrt(2/3)
  double conjectured;  ///< 12 sqrt(2) pi
};
ReferenceBounds reference_bounds();

struct OtobaTerms {
  double beta;
  double k2;
  double action;
};

/// beta = (8 - R)/2, k^2 = (1 + beta / sqrt(2 + beta^2)) / 2,
/// E = 2 * 2^(1/4) * pi * R * sqrt(arcsin k).
OtobaTerms otoba_terms(double R);
double otoba_action(double R);

struct FunctionalReport {
  double volume_closed = 0.0;
  double volume_quadrature = 0.0;
  double volume_quadrature_error = 0.0;
  double volume_metric = 0.0;
  double scalar_curvature = 0.0;
  double einstein_hilbert = 0.0;
  double einstein_hilbert_closed_form = 0.0;
  double aubin_bound = 0.0;
  double conjectured_yamabe = 0.0;
  std::vector<std::pair<double, double>> otoba_samples;
};

FunctionalReport functional_report(const PageMetric& m, const std::vector<double>& otoba_R = {});

}  // namespace pagegeom
