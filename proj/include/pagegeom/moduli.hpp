#pragma once

#include <complex>
#include <vector>

#include "pagegeom/geometry.hpp"
#include "pagegeom/submanifolds.hpp"

namespace pagegeom {

/// Flat torus data. The psi-cycle (period 4 pi) is always the first lattice
/// vector; the second is the phi-cycle for S1 and the theta-cycle (period
/// 2 pi, past the chart) for S3. Fields that do not apply are NaN.
struct TorusLattice {
  double L_psi = 0.0;
  double L_phi = 0.0;
  double L_theta = 0.0;
  double cos_angle = 0.0;          ///< from the induced metric
  double cos_angle_printed = 0.0;  ///< printed S1 formula
  double R_paper = 0.0;            ///< printed S1 radius function
  double conformal_coefficient = 0.0;  ///< printed S3 coefficient C sin^2 r / (f V)
  std::complex<double> tau;

  double second_length() const;
};

/// S1 at (r0, theta0). The printed formulas use the profile constant C.
TorusLattice torus_invariants_S1(const PageMetric& m, double r0, double theta0);
/// S3 at r0; rectangular.
TorusLattice torus_invariants_S3(const PageMetric& m, double r0);

/// tau = (L2 / L_psi) e^{i Theta} with Theta in (0, pi).
std::complex<double> teichmuller_point(const TorusLattice& lat);

struct Generator {
  enum Kind { T, S } kind;
  int power = 1;  ///< T^power; S ignores it

  bool operator==(const Generator&) const = default;
};

using Word = std::vector<Generator>;

struct Reduction {
  std::complex<double> tau;
  Word word;  ///< applied left to right to the input
};

/// Moves tau into -1/2 <= Re < 1/2, |tau| >= 1 (Re <= 0 on the unit arc).
Reduction reduce_to_fundamental_domain(std::complex<double> tau);
std::complex<double> apply_word(const Word& w, std::complex<double> z);
Word inverse_word(const Word& w);

struct ModuliRow {
  double r0 = 0.0;
  double theta0 = 0.0;  ///< NaN for S3
  double R_paper = 0.0;
  double cos_angle = 0.0;
  double cos_angle_printed = 0.0;
  std::complex<double> tau;
  std::complex<double> tau_reduced;
  double conformal_coefficient = 0.0;
  double sqrt_conformal = 0.0;
  double period_ratio = 0.0;  ///< Im of the reduced point
};

/// Interior grid r0 = i pi / (n_r + 1) (and likewise theta0 for S1).
std::vector<ModuliRow> scan_family(const PageMetric& m, FamilyId family, std::size_t n_r, std::size_t n_theta);

}  // namespace pagegeom
