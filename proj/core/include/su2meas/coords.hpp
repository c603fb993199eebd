#ifndef SU2MEAS_COORDS_HPP
#define SU2MEAS_COORDS_HPP

#include <numbers>

namespace su2meas::coords {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double half_pi = 0.5 * std::numbers::pi;

/// A point w = (alpha, beta) of C^2 stored as four reals,
/// alpha = x + i y, beta = u + i v.
struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
  double u = 0.0;
  double v = 0.0;
};

/// Double polar coordinates (r, rho, phi, theta):
/// alpha = r e^{i phi}, beta = rho e^{i theta}.
/// r, rho >= 0 and not both zero; angles live in [0, 2*pi).
struct DoublePolarPoint {
  double r = 0.0;
  double rho = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};

/// Hyperspherical coordinates (l, psi, phi, theta) with l > 0,
/// psi in [0, pi/2], angles in [0, 2*pi). (psi, phi, theta) are the
/// Hopf coordinates of w/|w| on the unit 3-sphere.
struct HopfPoint {
  double l = 0.0;
  double psi = 0.0;
  double phi = 0.0;
  double theta = 0.0;
};

/// |w|, overflow-safe for |fields| up to ~1e150.
double norm(const CartesianPoint& w);

/// Angle of the point (x, y) in [0, 2*pi). eta(0, 0) = 0 by convention:
/// the chart inverses are only defined up to a null set and the angle is
/// immaterial when the corresponding radius vanishes.
double eta(double y, double x);

CartesianPoint from_double_polar(const DoublePolarPoint& p);

/// Throws ZeroVectorError at the origin.
DoublePolarPoint to_double_polar(const CartesianPoint& w);

CartesianPoint from_hopf(const HopfPoint& h);

/// Throws ZeroVectorError at the origin. psi is exactly pi/2 when alpha = 0.
HopfPoint to_hopf(const CartesianPoint& w);

/// Volume element of the double polar chart: r * rho.
double jacobian_double_polar(const DoublePolarPoint& p);

/// Volume element of the hyperspherical chart: (1/2) l^3 sin(2 psi).
double jacobian_hopf(const HopfPoint& h);

}  // namespace su2meas::coords

#endif  // SU2MEAS_COORDS_HPP
