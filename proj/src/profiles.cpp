#include "pagegeom/profiles.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "pagegeom/numerics.hpp"

namespace pagegeom {

double page_quartic(double x) { return (((x + 4.0) * x - 6.0) * x + 12.0) * x - 3.0; }

double page_quartic_derivative(double x) { return ((4.0 * x + 12.0) * x - 12.0) * x + 12.0; }

double solve_page_constant() {
  if (!(page_quartic(0.0) * page_quartic(1.0) < 0.0))
    throw std::logic_error("solve_page_constant: quartic does not change sign on (0, 1)");
  return numerics::find_root(page_quartic, page_quartic_derivative, 0.0, 1.0, 1e-14);
}

std::string_view to_string(Profile p) { return p == Profile::V ? "V" : "f"; }

Profile parse_profile(std::string_view name) {
  if (name == "V") return Profile::V;
  if (name == "f") return Profile::f;
  throw std::invalid_argument("unknown profile '" + std::string(name) + "'");
}

ProfileSet::ProfileSet(double a)
    : a_(a), a2_(a * a), a4_(a * a * a * a), C_(0.0), P_(3.0 + 6.0 * a * a - a * a * a * a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("ProfileSet: a must lie in (0, 1)");
  const double q = 2.0 / (3.0 + a2_);
  C_ = q * q;
}

ProfileSet ProfileSet::page() {
  static const double a = solve_page_constant();
  return ProfileSet(a);
}

namespace {

double denominator(double a2, double r) {
  const double c = std::cos(r);
  return 3.0 - a2 - a2 * (1.0 + a2) * c * c;
}

}  // namespace

double ProfileSet::V_dot(double r) const {
  const double dn = denominator(a2_, r);
  return 2.0 * a2_ * (1.0 - a2_) * std::sin(2.0 * r) / (dn * dn);
}

double ProfileSet::V_ddot(double r) const {
  const double dn = denominator(a2_, r);
  const double s2 = std::sin(2.0 * r);
  return 4.0 * a2_ * (1.0 - a2_) * (std::cos(2.0 * r) * dn - a2_ * (1.0 + a2_) * s2 * s2) / (dn * dn * dn);
}

double ProfileSet::f_dot(double r) const { return 4.0 * a2_ * std::sin(2.0 * r) / P_; }

double ProfileSet::f_ddot(double r) const { return 8.0 * a2_ * std::cos(2.0 * r) / P_; }

double ProfileSet::U_dot(double r) const { return V_dot(r) / (2.0 * U(r)); }

double ProfileSet::U_ddot(double r) const {
  const double u = U(r);
  const double vd = V_dot(r);
  return V_ddot(r) / (2.0 * u) - vd * vd / (4.0 * u * u * u);
}

double ProfileSet::h_dot(double r) const { return f_dot(r) / (2.0 * h(r)); }

double ProfileSet::h_ddot(double r) const {
  const double hh = h(r);
  const double fd = f_dot(r);
  return f_ddot(r) / (2.0 * hh) - fd * fd / (4.0 * hh * hh * hh);
}

double ProfileSet::eval(Profile which, double r, int order) const {
  if (!(r >= 0.0 && r <= std::numbers::pi)) throw std::out_of_range("eval: r outside [0, pi]");
  const bool is_v = which == Profile::V;
  switch (order) {
    case 0:
      return is_v ? V(r) : f(r);
    case 1:
      return is_v ? V_dot(r) : f_dot(r);
    case 2:
      return is_v ? V_ddot(r) : f_ddot(r);
    default:
      throw std::out_of_range("eval: order must be 0, 1 or 2");
  }
}

ProfileExtrema profile_extrema(const ProfileSet& ps, Profile which) {
  const auto fn = [&](double r) { return ps.eval(which, r, 0); };
  const auto lo = numerics::scan_minimize(fn, 0.0, std::numbers::pi);
  const auto hi = numerics::scan_maximize(fn, 0.0, std::numbers::pi);
  return {lo.x, lo.value, hi.x, hi.value};
}

}  // namespace pagegeom
