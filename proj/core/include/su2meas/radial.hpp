#ifndef SU2MEAS_RADIAL_HPP
#define SU2MEAS_RADIAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "su2meas/coords.hpp"

namespace su2meas::radial {

/// Third moment of every normalized profile: 1 / (2 pi^2).
inline constexpr double unit_third_moment =
    0.5 / (coords::pi * coords::pi);

enum class ProfileKind { gaussian, exponential, ball_uniform, tabulated };

/// A nonnegative function f on [0, +inf) with finite third moment
/// M3(f) = integral of l^3 f(l) dl. Every such f is the radial density of
/// an SU(2)-invariant finite measure on C^2; M3(f) = 1/(2 pi^2) makes the
/// measure a probability.
///
/// Kinds:
///   gaussian     f(l) = e^{-l^2/2} / (4 pi^2)   (already normalized)
///   exponential  f(l) = e^{-rate l}
///   ball_uniform f(l) = 1 on [0, R], 0 beyond
///   tabulated    piecewise-linear interpolation of (grid, values),
///                zero outside the grid
class RadialProfile {
 public:
  static RadialProfile gaussian();
  static RadialProfile exponential(double rate);
  static RadialProfile ball_uniform(double radius);
  static RadialProfile tabulated(std::vector<double> grid,
                                 std::vector<double> values,
                                 std::string tag = "tabulated");

  /// Two-column CSV `l,f`, optional header, strictly ascending l,
  /// nonnegative f, at least two data rows. Throws IoError if the file
  /// cannot be opened and ProfileParseError (with the 1-based line) on
  /// malformed content.
  static RadialProfile from_csv(const std::string& path);
  static RadialProfile from_csv(std::istream& in, const std::string& name);

  double operator()(double l) const;
  ProfileKind kind() const noexcept { return kind_; }
  /// End of the support: +inf for the gaussian and exponential kinds.
  double support_end() const;
  const std::string& tag() const noexcept { return tag_; }

  double rate() const noexcept { return param_; }
  double radius() const noexcept { return param_; }
  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  RadialProfile(ProfileKind kind, double param, std::vector<double> grid,
                std::vector<double> values, std::string tag);

  /// Exact integral of q^3 f(q) over [0, l] for the tabulated kind.
  double tabulated_cubic_integral(double l) const;
  friend double third_moment(const RadialProfile&);
  friend class NormalizedProfile;

  ProfileKind kind_;
  double param_ = 0.0;
  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<double> prefix_;  // tabulated: integral of q^3 f up to grid_[i]
  std::string tag_;
};

/// M3(f). Analytic for the closed-form kinds, exact piecewise integration
/// for tabulated profiles.
double third_moment(const RadialProfile& f);

/// M3(f) by adaptive quadrature; the independent numerical route.
/// Throws DivergentMomentError if the scheme fails to converge.
double third_moment_quadrature(const RadialProfile& f, double rel_tol = 1e-10);

/// A profile rescaled into the normalized class: scale = 1/(2 pi^2 M3(f)),
/// so M3(scale * f) = 1/(2 pi^2) and the associated measure has total mass
/// one. The CDF machinery (truncation point, warm-start table for quantile
/// bisection) is built eagerly, so instances are immutable and safe to
/// share across threads.
class NormalizedProfile {
 public:
  explicit NormalizedProfile(RadialProfile profile);

  const RadialProfile& profile() const noexcept { return profile_; }
  double scale() const noexcept { return scale_; }

  /// scale * f(l): the radial density of the normalized measure.
  double density(double l) const;

  /// Density of |W| under the measure: 2 pi^2 l^3 scale f(l).
  double abs_density(double l) const;

  /// P[|W| <= l] = 2 pi^2 integral_0^l q^3 scale f(q) dq.
  double abs_cdf(double l) const;

  /// Inverse CDF on [0, 1): bisection against abs_cdf, warm-started from a
  /// 200-interval table. |abs_cdf(abs_quantile(u)) - u| <= 1e-10.
  double abs_quantile(double u) const;

  /// Truncation point: abs_cdf(support_end()) is 1 to machine precision.
  double support_end() const noexcept { return l_max_; }

  /// Integral of l^k density(l) dl, k in {0, 1, 2}. Diagnostics only;
  /// nothing in the library consumes these.
  double moment(int k) const;

 private:
  double abs_cdf_unclamped(double l) const;

  RadialProfile profile_;
  double scale_ = 0.0;
  double l_max_ = 0.0;
  std::vector<double> warm_l_;
  std::vector<double> warm_cdf_;
};

/// Throws ZeroMassError when M3(f) = 0, DivergentMomentError if it is not
/// finite.
NormalizedProfile normalize(RadialProfile profile);

}  // namespace su2meas::radial

#endif  // SU2MEAS_RADIAL_HPP
