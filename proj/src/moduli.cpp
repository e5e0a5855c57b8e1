#include "pagegeom/moduli.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pagegeom {

using std::numbers::pi;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_open_interval(double x, const char* what) {
  if (!(x > 0.0 && x < pi)) throw std::domain_error(std::string(what) + " must lie in (0, pi)");
}

}  // namespace

double TorusLattice::second_length() const { return std::isnan(L_phi) ? L_theta : L_phi; }

TorusLattice torus_invariants_S1(const PageMetric& m, double r0, double theta0) {
  require_open_interval(r0, "r0");
  require_open_interval(theta0, "theta0");
  const auto g = m.metric(Vec<double, 4>{r0, 0.0, 0.0, theta0});
  const double gpp = g[kPhi][kPhi];
  const double gss = g[kPsi][kPsi];
  const double gps = g[kPhi][kPsi];

  TorusLattice lat;
  lat.L_phi = 2.0 * pi * std::sqrt(gpp);
  lat.L_psi = 4.0 * pi * std::sqrt(gss);
  lat.L_theta = kNaN;
  lat.cos_angle = gps / std::sqrt(gpp * gss);

  const auto& ps = m.profiles();
  const double sr = std::sin(r0);
  const double x = ps.f(r0) * ps.V(r0) / (ps.C() * sr * sr);  // C^-1 f V sin^-2 r
  const double st = std::sin(theta0);
  const double ct = std::cos(theta0);
  // cos(theta) / sqrt(X tan^2 + 1), written without tan so theta0 = pi/2 is regular.
  lat.cos_angle_printed = ct * std::abs(ct) / std::sqrt(x * st * st + ct * ct);
  lat.R_paper = 0.5 * (x * st * st + ct * ct);
  lat.conformal_coefficient = kNaN;
  lat.tau = teichmuller_point(lat);
  return lat;
}

TorusLattice torus_invariants_S3(const PageMetric& m, double r0) {
  require_open_interval(r0, "r0");
  const auto g = m.metric(Vec<double, 4>{r0, 0.0, 0.0, pi / 2.0});
  TorusLattice lat;
  lat.L_psi = 4.0 * pi * std::sqrt(g[kPsi][kPsi]);
  lat.L_theta = 2.0 * pi * std::sqrt(g[kTheta][kTheta]);
  lat.L_phi = kNaN;
  lat.cos_angle = 0.0;
  lat.cos_angle_printed = kNaN;
  lat.R_paper = kNaN;
  const auto& ps = m.profiles();
  const double sr = std::sin(r0);
  lat.conformal_coefficient = ps.C() * sr * sr / (ps.f(r0) * ps.V(r0));
  lat.tau = teichmuller_point(lat);
  return lat;
}

std::complex<double> teichmuller_point(const TorusLattice& lat) {
  const double l2 = lat.second_length();
  if (!(lat.L_psi > 0.0) || !(l2 > 0.0)) throw std::domain_error("teichmuller_point: zero-length cycle");
  if (!(std::abs(lat.cos_angle) < 1.0)) throw std::domain_error("teichmuller_point: collinear cycles");
  const double s = std::sqrt(1.0 - lat.cos_angle * lat.cos_angle);
  return (l2 / lat.L_psi) * std::complex<double>(lat.cos_angle, s);
}

Reduction reduce_to_fundamental_domain(std::complex<double> tau) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("reduce_to_fundamental_domain: Im tau must be positive");
  constexpr double band = 8.0 * std::numeric_limits<double>::epsilon();
  Reduction out{tau, {}};
  for (int it = 0; it < 10000; ++it) {
    const double shift = -std::floor(out.tau.real() + 0.5);
    if (shift != 0.0) {
      out.tau += shift;
      out.word.push_back({Generator::T, static_cast<int>(shift)});
    }
    const double n2 = std::norm(out.tau);
    const bool inside = n2 < 1.0 - band;
    const bool on_arc_right = std::abs(n2 - 1.0) <= band && out.tau.real() > 0.0;
    if (!inside && !on_arc_right) return out;
    out.tau = -1.0 / out.tau;
    out.word.push_back({Generator::S, 1});
  }
  throw std::runtime_error("reduce_to_fundamental_domain: no convergence");
}

std::complex<double> apply_word(const Word& w, std::complex<double> z) {
  for (const auto& g : w) z = g.kind == Generator::T ? z + static_cast<double>(g.power) : -1.0 / z;
  return z;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& g : out)
    if (g.kind == Generator::T) g.power = -g.power;
  return out;
}

std::vector<ModuliRow> scan_family(const PageMetric& m, FamilyId family, std::size_t n_r, std::size_t n_theta) {
  if (family != FamilyId::S1 && family != FamilyId::S3) throw std::invalid_argument("scan_family: S1 or S3 only");
  if (n_r < 2 || (family == FamilyId::S1 && n_theta < 2)) throw std::invalid_argument("scan_family: grid must be at least 2");
  const auto node = [](std::size_t i, std::size_t n) {
    return pi * static_cast<double>(i + 1) / static_cast<double>(n + 1);
  };
  std::vector<ModuliRow> rows;
  const auto fill = [&](const TorusLattice& lat, double r0, double theta0) {
    ModuliRow row;
    row.r0 = r0;
    row.theta0 = theta0;
    row.R_paper = lat.R_paper;
    row.cos_angle = lat.cos_angle;
    row.cos_angle_printed = lat.cos_angle_printed;
    row.tau = lat.tau;
    row.tau_reduced = reduce_to_fundamental_domain(lat.tau).tau;
    row.conformal_coefficient = lat.conformal_coefficient;
    row.sqrt_conformal = std::sqrt(lat.conformal_coefficient);
    row.period_ratio = row.tau_reduced.imag();
    rows.push_back(row);
  };
  for (std::size_t i = 0; i < n_r; ++i) {
    const double r0 = node(i, n_r);
    if (family == FamilyId::S3) {
      fill(torus_invariants_S3(m, r0), r0, kNaN);
      continue;
    }
    for (std::size_t j = 0; j < n_theta; ++j) {
      const double th = node(j, n_theta);
      fill(torus_invariants_S1(m, r0, th), r0, th);
    }
  }
  return rows;
}

}  // namespace pagegeom
