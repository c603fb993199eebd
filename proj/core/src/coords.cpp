#include "su2meas/coords.hpp"

#include <cmath>
#include <stdexcept>

#include "su2meas/errors.hpp"

namespace su2meas::coords {

namespace {

bool all_finite(const CartesianPoint& w) {
  return std::isfinite(w.x) && std::isfinite(w.y) && std::isfinite(w.u) &&
         std::isfinite(w.v);
}

}  // namespace

double norm(const CartesianPoint& w) {
  return std::hypot(std::hypot(w.x, w.y), std::hypot(w.u, w.v));
}

double eta(double y, double x) {
  if (x == 0.0 && y == 0.0) return 0.0;
  double a = std::atan2(y, x);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a = 0.0;  // keep the interval half-open after rounding
  return a;
}

CartesianPoint from_double_polar(const DoublePolarPoint& p) {
  if (!(p.r >= 0.0) || !(p.rho >= 0.0) || (p.r == 0.0 && p.rho == 0.0) ||
      !std::isfinite(p.phi) || !std::isfinite(p.theta)) {
    throw std::invalid_argument("invalid double polar point");
  }
  return {p.r * std::cos(p.phi), p.r * std::sin(p.phi),
          p.rho * std::cos(p.theta), p.rho * std::sin(p.theta)};
}

DoublePolarPoint to_double_polar(const CartesianPoint& w) {
  if (!all_finite(w)) throw std::invalid_argument("non-finite point");
  const double r = std::hypot(w.x, w.y);
  const double rho = std::hypot(w.u, w.v);
  if (r == 0.0 && rho == 0.0) throw ZeroVectorError{};
  return {r, rho, eta(w.y, w.x), eta(w.v, w.u)};
}

CartesianPoint from_hopf(const HopfPoint& h) {
  if (!(h.l > 0.0) || !std::isfinite(h.l) || !(h.psi >= 0.0) ||
      !(h.psi <= half_pi) || !std::isfinite(h.phi) || !std::isfinite(h.theta)) {
    throw std::invalid_argument("invalid hyperspherical point");
  }
  const double r = h.l * std::cos(h.psi);
  const double rho = h.l * std::sin(h.psi);
  return {r * std::cos(h.phi), r * std::sin(h.phi), rho * std::cos(h.theta),
          rho * std::sin(h.theta)};
}

HopfPoint to_hopf(const CartesianPoint& w) {
  if (!all_finite(w)) throw std::invalid_argument("non-finite point");
  const double r = std::hypot(w.x, w.y);
  const double rho = std::hypot(w.u, w.v);
  if (r == 0.0 && rho == 0.0) throw ZeroVectorError{};
  // atan2(rho, r) lands in [0, pi/2] and hits pi/2 exactly when r = 0.
  return {std::hypot(r, rho), std::atan2(rho, r), eta(w.y, w.x), eta(w.v, w.u)};
}

double jacobian_double_polar(const DoublePolarPoint& p) { return p.r * p.rho; }

double jacobian_hopf(const HopfPoint& h) {
  return 0.5 * h.l * h.l * h.l * std::sin(2.0 * h.psi);
}

}  // namespace su2meas::coords
