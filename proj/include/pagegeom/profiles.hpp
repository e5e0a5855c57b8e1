#pragma once

#include <cmath>
#include <string_view>

namespace pagegeom {

/// p(x) = x^4 + 4x^3 - 6x^2 + 12x - 3.
double page_quartic(double x);
double page_quartic_derivative(double x);

/// Unique root of the quartic in (0, 1), |p(a)| < 1e-12.
double solve_page_constant();

enum class Profile { V, f };

std::string_view to_string(Profile p);
Profile parse_profile(std::string_view name);

/// Profile functions of the Page metric for a fixed constant a.
///
///   V(r) = (1 - a^2 cos^2 r) / (3 - a^2 - a^2 (1 + a^2) cos^2 r)
///   f(r) = 4 (1 - a^2 cos^2 r) / (3 + 6 a^2 - a^4)
///   C    = (2 / (3 + a^2))^2
///
/// V and f are templated so the frame pipeline can push dual numbers through
/// them. The *_dot / *_ddot members are hand-differentiated closed forms.
class ProfileSet {
 public:
  explicit ProfileSet(double a);
  static ProfileSet page();

  double a() const noexcept { return a_; }
  double a2() const noexcept { return a2_; }
  double a4() const noexcept { return a4_; }
  double C() const noexcept { return C_; }
  double D() const noexcept { return std::sqrt(C_); }
  double P() const noexcept { return P_; }

  template <class T>
  T V(const T& r) const {
    using std::cos;
    const T c = cos(r);
    const T c2 = c * c;
    return (T(1.0) - a2_ * c2) / (T(3.0 - a2_) - a2_ * (1.0 + a2_) * c2);
  }

  template <class T>
  T f(const T& r) const {
    using std::cos;
    const T c = cos(r);
    return T(4.0) * (T(1.0) - a2_ * c * c) / T(P_);
  }

  double V_dot(double r) const;
  double V_ddot(double r) const;
  double f_dot(double r) const;
  double f_ddot(double r) const;

  double U(double r) const { return std::sqrt(V(r)); }
  double h(double r) const { return std::sqrt(f(r)); }
  double U_dot(double r) const;
  double U_ddot(double r) const;
  double h_dot(double r) const;
  double h_ddot(double r) const;

  /// Value or r-derivative (order 0, 1, 2) on [0, pi]; rejects anything else.
  double eval(Profile which, double r, int order) const;

 private:
  double a_;
  double a2_;
  double a4_;
  double C_;
  double P_;
};

struct ProfileExtrema {
  double argmin;
  double min;
  double argmax;
  double max;
};

ProfileExtrema profile_extrema(const ProfileSet& ps, Profile which);

}  // namespace pagegeom
