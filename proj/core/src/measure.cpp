#include "su2meas/measure.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "su2meas/errors.hpp"

namespace su2meas::measure {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_intervals(const std::vector<std::pair<double, double>>& intervals,
                     double domain_hi, const char* what) {
  double prev_hi = 0.0;
  bool first = true;
  for (const auto& [lo, hi] : intervals) {
    if (std::isnan(lo) || std::isnan(hi) || lo < 0.0 || hi < lo || hi > domain_hi) {
      throw std::invalid_argument(std::string(what) + ": invalid interval");
    }
    if (!first && lo < prev_hi) {
      throw std::invalid_argument(std::string(what) +
                                  ": intervals must be sorted and disjoint");
    }
    prev_hi = hi;
    first = false;
  }
}

}  // namespace

AngleSet::AngleSet(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  check_intervals(intervals_, coords::half_pi, "AngleSet");
}

AngleSet AngleSet::interval(double lo, double hi) {
  return AngleSet({{lo, hi}});
}

AngleSet AngleSet::full() { return interval(0.0, coords::half_pi); }

RadiusSet::RadiusSet(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  check_intervals(intervals_, kInf, "RadiusSet");
}

RadiusSet RadiusSet::interval(double lo, double hi) {
  return RadiusSet({{lo, hi}});
}

RadiusSet RadiusSet::full() { return interval(0.0, kInf); }

double InvariantMeasure::cone_measure(const AngleSet& psi_set) const {
  double total = 0.0;
  for (const auto& [lo, hi] : psi_set.intervals()) {
    const double s_lo = std::sin(lo);
    const double s_hi = std::sin(hi);
    total += s_hi * s_hi - s_lo * s_lo;
  }
  return total;
}

double InvariantMeasure::shell_measure(const RadiusSet& l_set) const {
  double total = 0.0;
  for (const auto& [lo, hi] : l_set.intervals()) {
    total += profile_.abs_cdf(hi) - profile_.abs_cdf(lo);
  }
  return total;
}

double InvariantMeasure::product_measure(const RadiusSet& l_set,
                                         const AngleSet& psi_set) const {
  return shell_measure(l_set) * cone_measure(psi_set);
}

double chain_probability(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw std::invalid_argument("t must be finite and >= 0");
  }
  const double s = t * t;
  if (std::isinf(s)) return 1.0;
  return s / (1.0 + s);
}

double born_probability(double a_mag, double b_mag) {
  if (std::isnan(a_mag) || std::isnan(b_mag) || a_mag < 0.0 || b_mag < 0.0) {
    throw std::invalid_argument("magnitudes must be >= 0");
  }
  if (a_mag == 0.0 && b_mag == 0.0) throw BothZeroError{};
  const double m = std::max(a_mag, b_mag);
  const double x = a_mag / m;
  const double y = b_mag / m;
  return x * x / (x * x + y * y);
}

}  // namespace su2meas::measure
