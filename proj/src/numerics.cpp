#include "pagegeom/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pagegeom::numerics {

namespace {

constexpr int kMaxRootIterations = 400;

double root_impl(const Function1D& f, const Function1D* df, double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("find_root: require lo < hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!(flo * fhi < 0.0)) throw NoSignChange("find_root: f(lo) and f(hi) have the same sign");

  const double polish_width = 1e-3 * (hi - lo);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxRootIterations; ++it) {
    const double fx = f(x);
    if (std::abs(fx) < tol) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;

    double next = 0.5 * (lo + hi);
    if (hi - lo < polish_width) {
      double slope = 0.0;
      if (df != nullptr) {
        slope = (*df)(x);
      } else {
        const double h = 1e-7 * std::max(1.0, std::abs(x));
        slope = (f(x + h) - f(x - h)) / (2.0 * h);
      }
      if (slope != 0.0 && std::isfinite(slope)) {
        const double newton = x - fx / slope;
        if (newton > lo && newton < hi) next = newton;
      }
    }
    x = next;
  }
  const double fx = f(x);
  if (std::abs(fx) < tol) return x;
  throw std::runtime_error("find_root: tolerance not attainable in double precision");
}

struct SimpsonAccumulator {
  const Function1D& f;
  std::size_t evaluations = 0;
  double error = 0.0;
  bool depth_exceeded = false;

  static constexpr int kMinDepth = 4;

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth,
                 int level) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    evaluations += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const bool converged = level >= kMinDepth && std::abs(delta) <= 15.0 * tol;
    const bool unresolvable = (b - a) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(m));
    if (converged || unresolvable || depth <= 0) {
      if (!converged && depth <= 0) depth_exceeded = true;
      error += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, level + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, level + 1);
  }
};

}  // namespace

double find_root(const Function1D& f, double lo, double hi, double tol) {
  return root_impl(f, nullptr, lo, hi, tol);
}

double find_root(const Function1D& f, const Function1D& df, double lo, double hi, double tol) {
  return root_impl(f, &df, lo, hi, tol);
}

QuadratureResult integrate_1d(const Function1D& f, double a, double b, double tol, int max_depth) {
  if (!(a < b)) throw std::invalid_argument("integrate_1d: require a < b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_1d: require tol > 0");
  SimpsonAccumulator acc{f};
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  acc.evaluations = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value = acc.recurse(a, b, fa, fm, fb, whole, tol, max_depth, 0);
  QuadratureResult out{value, acc.error, acc.evaluations};
  if (acc.depth_exceeded) throw QuadratureError("integrate_1d: maximum depth exceeded", out);
  return out;
}

QuadratureResult integrate_2d(const Function2D& f, const Rect& rect, double tol, int max_depth) {
  if (!(rect.x0 < rect.x1) || !(rect.y0 < rect.y1)) throw std::invalid_argument("integrate_2d: empty rectangle");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_2d: require tol > 0");
  const double inner_tol = 0.5 * tol / (rect.x1 - rect.x0);
  std::size_t inner_evaluations = 0;
  double inner_error = 0.0;
  bool inner_failed = false;
  const Function1D outer = [&](double x) {
    QuadratureResult r;
    try {
      r = integrate_1d([&](double y) { return f(x, y); }, rect.y0, rect.y1, inner_tol, max_depth);
    } catch (const QuadratureError& e) {
      inner_failed = true;
      r = e.partial();
    }
    inner_evaluations += r.evaluations;
    inner_error = std::max(inner_error, r.error_estimate);
    return r.value;
  };
  QuadratureResult out;
  bool outer_failed = false;
  try {
    out = integrate_1d(outer, rect.x0, rect.x1, 0.5 * tol, max_depth);
  } catch (const QuadratureError& e) {
    outer_failed = true;
    out = e.partial();
  }
  out.evaluations = inner_evaluations;
  out.error_estimate += inner_error * (rect.x1 - rect.x0);
  if (inner_failed || outer_failed) throw QuadratureError("integrate_2d: maximum depth exceeded", out);
  return out;
}

double central_difference(const Function1D& f, double x, int order, double step, Richardson richardson) {
  if (order != 1 && order != 2) throw std::invalid_argument("central_difference: order must be 1 or 2");
  if (!(step > 0.0)) throw std::invalid_argument("central_difference: step must be positive");
  const auto stencil = [&](double h) {
    if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  };
  const double coarse = stencil(step);
  if (richardson == Richardson::off) return coarse;
  const double fine = stencil(0.5 * step);
  return fine + (fine - coarse) / 3.0;
}

Extremum golden_section_minimize(const Function1D& f, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw std::invalid_argument("golden_section_minimize: require lo <= hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a))) break;
  }
  Extremum best{0.5 * (a + b), f(0.5 * (a + b))};
  // Endpoint minima are common for symmetric profiles; the bracket only ever
  // approaches them, so compare against the interval ends directly.
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx <= best.value && std::abs(x - best.x) <= 2.0 * tol + 1e-9) best = {x, fx};
  }
  return best;
}

Extremum golden_section_maximize(const Function1D& f, double lo, double hi, double tol) {
  const Extremum e = golden_section_minimize([&](double x) { return -f(x); }, lo, hi, tol);
  return {e.x, -e.value};
}

Extremum scan_minimize(const Function1D& f, double lo, double hi, std::size_t samples) {
  if (samples < 3) throw std::invalid_argument("scan_minimize: need at least 3 samples");
  const double h = (hi - lo) / static_cast<double>(samples - 1);
  std::size_t best = 0;
  double best_value = f(lo);
  for (std::size_t i = 1; i < samples; ++i) {
    const double v = f(lo + h * static_cast<double>(i));
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  const double a = lo + h * static_cast<double>(best == 0 ? 0 : best - 1);
  const double b = std::min(hi, lo + h * static_cast<double>(best + 1));
  const Extremum refined = golden_section_minimize(f, a, b);
  if (refined.value <= best_value) return refined;
  return {lo + h * static_cast<double>(best), best_value};
}

Extremum scan_maximize(const Function1D& f, double lo, double hi, std::size_t samples) {
  const Extremum e = scan_minimize([&](double x) { return -f(x); }, lo, hi, samples);
  return {e.x, -e.value};
}

}  // namespace pagegeom::numerics
