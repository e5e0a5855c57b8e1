#include "pagegeom/functionals.hpp"

#include <cmath>
#include <numbers>

namespace pagegeom {

using std::numbers::pi;

namespace {

constexpr double kAngularFactor = 8.0 * pi * pi;  // 2 pi for phi times 4 pi for psi

}  // namespace

numerics::QuadratureResult page_volume_quadrature(const ProfileSet& ps, double tol) {
  const auto density = [&](double r, double th) {
    const double f = ps.f(r);
    const double sr = std::sin(r);
    const double st = std::sin(th);
    return ps.C() / 64.0 * f * f * sr * sr * st * st;
  };
  auto res = numerics::integrate_2d(density, {0.0, pi, 0.0, pi}, tol / kAngularFactor);
  res.value *= kAngularFactor;
  res.error_estimate *= kAngularFactor;
  return res;
}

double page_volume(const ProfileSet& ps, VolumeMethod method, double tol) {
  if (method == VolumeMethod::quadrature) return page_volume_quadrature(ps, tol).value;
  const double a2 = ps.a2();
  const double a4 = ps.a4();
  const double p = ps.P();
  return std::pow(pi, 4) / 4.0 * (a4 - 4.0 * a2 + 16.0) / ((a2 + 3.0) * (a2 + 3.0) * p * p);
}

numerics::QuadratureResult metric_volume(const PageMetric& m, double tol) {
  const auto density = [&](double r, double th) {
    return metric_determinant(m, ChartPoint{r, 0.0, 0.0, th}).sqrt_det;
  };
  auto res = numerics::integrate_2d(density, {0.0, pi, 0.0, pi}, tol / kAngularFactor);
  res.value *= kAngularFactor;
  res.error_estimate *= kAngularFactor;
  return res;
}

double page_scalar_curvature(const ProfileSet& ps) { return 12.0 * (1.0 + ps.a2()); }

EinsteinHilbert einstein_hilbert_page(const ProfileSet& ps) {
  const double a2 = ps.a2();
  const double a4 = ps.a4();
  const double vol = page_volume(ps, VolumeMethod::closed);
  return {page_scalar_curvature(ps) * std::sqrt(vol),
          6.0 * (1.0 + a2) * pi * pi * std::sqrt(a4 - 4.0 * a2 + 16.0) / ((a2 + 3.0) * ps.P())};
}

ReferenceBounds reference_bounds() { return {24.0 * pi * std::sqrt(2.0 / 3.0), 12.0 * std::sqrt(2.0) * pi}; }

OtobaTerms otoba_terms(double R) {
  const double beta = (8.0 - R) / 2.0;
  const double s = std::sqrt(2.0 + beta * beta);
  // For beta << 0, 1 + beta/s cancels; 1 + beta/s = 2 / (s (s + |beta|)) there.
  const double one_plus = beta >= 0.0 ? 1.0 + beta / s : 2.0 / (s * (s - beta));
  const double k2 = 0.5 * one_plus;
  const double action = 2.0 * std::pow(2.0, 0.25) * pi * R * std::sqrt(std::asin(std::sqrt(k2)));
  return {beta, k2, action};
}

double otoba_action(double R) { return otoba_terms(R).action; }

FunctionalReport functional_report(const PageMetric& m, const std::vector<double>& otoba_R) {
  const auto& ps = m.profiles();
  FunctionalReport out;
  out.volume_closed = page_volume(ps, VolumeMethod::closed);
  const auto q = page_volume_quadrature(ps);
  out.volume_quadrature = q.value;
  out.volume_quadrature_error = q.error_estimate;
  out.volume_metric = metric_volume(m).value;
  out.scalar_curvature = page_scalar_curvature(ps);
  const auto eh = einstein_hilbert_page(ps);
  out.einstein_hilbert = eh.from_volume;
  out.einstein_hilbert_closed_form = eh.closed_form;
  const auto b = reference_bounds();
  out.aubin_bound = b.aubin;
  out.conjectured_yamabe = b.conjectured;
  for (double R : otoba_R) out.otoba_samples.emplace_back(R, otoba_action(R));
  return out;
}

}  // namespace pagegeom
