#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace pagegeom::numerics {

using Function1D = std::function<double(double)>;
using Function2D = std::function<double(double, double)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Thrown when adaptive subdivision hits its depth limit before the local
// error test passes. Carries whatever was accumulated.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

class NoSignChange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root of f in [lo, hi] with |f(root)| < tol. Bisection narrows the bracket,
/// then safeguarded Newton steps polish; the derivative-free overload uses a
/// central difference for the Newton slope. Throws NoSignChange unless
/// f(lo) * f(hi) < 0 (an exact zero at an endpoint is returned as-is).
double find_root(const Function1D& f, double lo, double hi, double tol);
double find_root(const Function1D& f, const Function1D& df, double lo, double hi, double tol);

/// Adaptive Simpson with the Richardson (Boole) correction. `tol` is absolute.
QuadratureResult integrate_1d(const Function1D& f, double a, double b, double tol, int max_depth = 50);

struct Rect {
  double x0, x1, y0, y1;
};

/// Iterated adaptive Simpson: outer over x, inner over y.
QuadratureResult integrate_2d(const Function2D& f, const Rect& rect, double tol, int max_depth = 50);

enum class Richardson { off, on };

/// Central difference of order 1 or 2. With Richardson::on the estimate at
/// `step` is combined with the one at `step / 2` to cancel the h^2 term.
double central_difference(const Function1D& f, double x, int order, double step,
                          Richardson richardson = Richardson::off);

struct Extremum {
  double x;
  double value;
};

Extremum golden_section_minimize(const Function1D& f, double lo, double hi, double tol = 1e-12);
Extremum golden_section_maximize(const Function1D& f, double lo, double hi, double tol = 1e-12);

/// Dense scan followed by golden-section refinement in the best cell.
/// Returns the global minimum of f on [lo, hi] as resolved by the grid.
Extremum scan_minimize(const Function1D& f, double lo, double hi, std::size_t samples = 1001);
Extremum scan_maximize(const Function1D& f, double lo, double hi, std::size_t samples = 1001);

}  // namespace pagegeom::numerics
