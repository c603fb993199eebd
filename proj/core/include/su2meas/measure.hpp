#ifndef SU2MEAS_MEASURE_HPP
#define SU2MEAS_MEASURE_HPP

#include <utility>
#include <vector>

#include "su2meas/radial.hpp"

namespace su2meas::measure {

/// Finite union of disjoint closed intervals of [0, pi/2], sorted.
/// Selects the cone { w : arctan(|beta|/|alpha|) in set }.
class AngleSet {
 public:
  AngleSet() = default;  // empty set
  explicit AngleSet(std::vector<std::pair<double, double>> intervals);
  static AngleSet interval(double lo, double hi);
  static AngleSet full();

  const std::vector<std::pair<double, double>>& intervals() const noexcept {
    return intervals_;
  }

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// Finite union of disjoint closed intervals of [0, +inf), sorted; the
/// upper endpoint may be +inf. Selects the shell { w : |w| in set }.
class RadiusSet {
 public:
  RadiusSet() = default;  // empty set
  explicit RadiusSet(std::vector<std::pair<double, double>> intervals);
  static RadiusSet interval(double lo, double hi);
  static RadiusSet full();

  const std::vector<std::pair<double, double>>& intervals() const noexcept {
    return intervals_;
  }

 private:
  std::vector<std::pair<double, double>> intervals_;
};

/// An SU(2)-invariant probability measure on C^2, determined by its
/// normalized radial profile. Structured sets evaluate in closed form;
/// no quadrature runs behind this interface.
class InvariantMeasure {
 public:
  explicit InvariantMeasure(radial::NormalizedProfile profile)
      : profile_(std::move(profile)) {}

  /// Measure of the cone over `psi_set`: sum of sin^2(hi) - sin^2(lo).
  /// The same value for every invariant probability measure; the radial
  /// profile is deliberately never consulted.
  double cone_measure(const AngleSet& psi_set) const;

  /// Measure of the shell over `l_set`: sum of CDF increments.
  double shell_measure(const RadiusSet& l_set) const;

  /// Measure of the product set: shell_measure * cone_measure.
  double product_measure(const RadiusSet& l_set, const AngleSet& psi_set) const;

  const radial::NormalizedProfile& profile() const noexcept { return profile_; }

 private:
  radial::NormalizedProfile profile_;
};

/// Measure of the cone { |beta| <= t |alpha| }: t^2 / (1 + t^2), for every
/// invariant probability measure. t must be finite and >= 0; the t -> inf
/// limit is born_probability(a, 0).
double chain_probability(double t);

/// P[a |alpha| >= b |beta|] = a^2 / (a^2 + b^2). Throws BothZeroError when
/// both magnitudes vanish.
double born_probability(double a_mag, double b_mag);

}  // namespace su2meas::measure

#endif  // SU2MEAS_MEASURE_HPP
