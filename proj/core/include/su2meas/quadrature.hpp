#ifndef SU2MEAS_QUADRATURE_HPP
#define SU2MEAS_QUADRATURE_HPP

#include <cmath>
#include <cstdlib>
#include <utility>

namespace su2meas::quad {

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

namespace detail {

template <class F>
double composite_simpson(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

template <class F>
double adapt(F&& f, double a, double b, double fa, double fm, double fb,
             double whole, double eps, int depth, Result& out) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * eps || b - m <= std::abs(m) * 1e-15) {
    out.error_estimate += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    out.converged = false;
    out.error_estimate += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1, out) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1, out);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f on [a, b]. Intervals are subdivided
/// (up to 60 levels) until the local Richardson error estimate drops below
/// the share of rel_tol * (coarse global estimate) assigned to them.
template <class F>
Result integrate(F&& f, double a, double b, double rel_tol = 1e-12) {
  Result out;
  if (a == b) return out;
  const double coarse =
      std::abs(detail::composite_simpson(f, a, b, 32));
  const double eps = rel_tol * std::max(coarse, 1e-300);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  out.value = detail::adapt(f, a, b, fa, fm, fb, whole, eps, 60, out);
  return out;
}

/// Quadrature of f on [a, +inf) by blocks of doubling width. Stops once two
/// consecutive blocks contribute less than 1e-16 of the running integral;
/// reports converged = false if the tail is still alive past 1e12.
template <class F>
Result integrate_to_infinity(F&& f, double a, double rel_tol = 1e-12) {
  Result total;
  double lo = a;
  double width = 1.0;
  int quiet_blocks = 0;
  while (lo < 1e12) {
    const Result block = integrate(f, lo, lo + width, rel_tol);
    total.value += block.value;
    total.error_estimate += block.error_estimate;
    total.converged = total.converged && block.converged;
    if (std::abs(block.value) <= 1e-16 * std::max(std::abs(total.value), 1e-300)) {
      if (++quiet_blocks >= 2) return total;
    } else {
      quiet_blocks = 0;
    }
    lo += width;
    width *= 2.0;
  }
  total.converged = false;
  return total;
}

}  // namespace su2meas::quad

#endif  // SU2MEAS_QUADRATURE_HPP
