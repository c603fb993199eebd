#include "su2meas/radial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "su2meas/errors.hpp"
#include "su2meas/quadrature.hpp"

namespace su2meas::radial {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFourPiSq = 4.0 * coords::pi * coords::pi;
constexpr double kTwoPiSq = 2.0 * coords::pi * coords::pi;

/// sum_{j >= k} e^{-x} x^j / j!, the cancellation-free form of the Erlang
/// CDF 1 - e^{-x} sum_{j < k} x^j / j!. Used for small x.
double erlang_tail(int k, double x) {
  if (x <= 0.0) return 0.0;
  double term = 1.0;
  for (int j = 1; j <= k; ++j) term *= x / j;
  double sum = 0.0;
  for (int j = k; j < k + 80; ++j) {
    sum += term;
    term *= x / (j + 1);
    if (term < sum * 1e-18) break;
  }
  return std::exp(-x) * sum;
}

/// P[|W| <= l] for the gaussian kind: 1 - (1 + l^2/2) e^{-l^2/2}.
double gaussian_abs_cdf(double l) {
  const double y = 0.5 * l * l;
  if (y < 1.0) return erlang_tail(2, y);
  return 1.0 - (1.0 + y) * std::exp(-y);
}

/// P[|W| <= l] for the normalized exponential kind:
/// 1 - e^{-x} (1 + x + x^2/2 + x^3/6) with x = rate * l.
double exponential_abs_cdf(double rate, double l) {
  const double x = rate * l;
  if (x < 1.0) return erlang_tail(4, x);
  return 1.0 - std::exp(-x) * (1.0 + x * (1.0 + x * (0.5 + x / 6.0)));
}

double linear_interp(const std::vector<double>& grid,
                     const std::vector<double>& values, double l) {
  if (l < grid.front() || l > grid.back()) return 0.0;
  const auto it = std::upper_bound(grid.begin(), grid.end(), l);
  if (it == grid.end()) return values.back();
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  const std::size_t lo = hi - 1;
  const double w = (l - grid[lo]) / (grid[hi] - grid[lo]);
  return values[lo] + w * (values[hi] - values[lo]);
}

/// Exact integral of q^3 (a + b q) over [q0, q1].
double cubic_segment_integral(double a, double b, double q0, double q1) {
  const double q0_2 = q0 * q0;
  const double q1_2 = q1 * q1;
  const double quartic = q1_2 * q1_2 - q0_2 * q0_2;
  const double quintic = q1_2 * q1_2 * q1 - q0_2 * q0_2 * q0;
  return a * quartic / 4.0 + b * quintic / 5.0;
}

}  // namespace

RadialProfile::RadialProfile(ProfileKind kind, double param,
                             std::vector<double> grid,
                             std::vector<double> values, std::string tag)
    : kind_(kind),
      param_(param),
      grid_(std::move(grid)),
      values_(std::move(values)),
      tag_(std::move(tag)) {
  if (kind_ != ProfileKind::tabulated) return;
  prefix_.resize(grid_.size());
  prefix_[0] = 0.0;
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    const double slope =
        (values_[i] - values_[i - 1]) / (grid_[i] - grid_[i - 1]);
    const double intercept = values_[i - 1] - slope * grid_[i - 1];
    prefix_[i] = prefix_[i - 1] + cubic_segment_integral(intercept, slope,
                                                         grid_[i - 1], grid_[i]);
  }
}

RadialProfile RadialProfile::gaussian() {
  return {ProfileKind::gaussian, 0.0, {}, {}, "gaussian"};
}

RadialProfile RadialProfile::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("exponential profile needs rate > 0");
  }
  std::ostringstream tag;
  tag << "exponential:" << rate;
  return {ProfileKind::exponential, rate, {}, {}, tag.str()};
}

RadialProfile RadialProfile::ball_uniform(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ball profile needs radius > 0");
  }
  std::ostringstream tag;
  tag << "ball:" << radius;
  return {ProfileKind::ball_uniform, radius, {}, {}, tag.str()};
}

RadialProfile RadialProfile::tabulated(std::vector<double> grid,
                                       std::vector<double> values,
                                       std::string tag) {
  if (grid.size() != values.size()) {
    throw std::invalid_argument("grid and values differ in length");
  }
  if (grid.size() < 2) {
    throw std::invalid_argument("tabulated profile needs at least 2 rows");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !std::isfinite(values[i])) {
      throw std::invalid_argument("tabulated profile has non-finite entries");
    }
    if (grid[i] < 0.0) throw std::invalid_argument("grid values must be >= 0");
    if (values[i] < 0.0) throw std::invalid_argument("profile values must be >= 0");
    if (i > 0 && grid[i] <= grid[i - 1]) {
      throw std::invalid_argument("grid must be strictly ascending");
    }
  }
  return {ProfileKind::tabulated, 0.0, std::move(grid), std::move(values),
          std::move(tag)};
}

RadialProfile RadialProfile::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open profile file: " + path);
  return from_csv(in, path);
}

RadialProfile RadialProfile::from_csv(std::istream& in, const std::string& name) {
  std::vector<double> grid;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;

  auto parse_field = [](std::string_view field, double& out) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
      field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t'))
      field.remove_suffix(1);
    if (field.empty()) return false;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc{} && ptr == field.data() + field.size();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    const auto comma = line.find(',');
    const auto first_field = std::string_view(line).substr(
        0, comma == std::string::npos ? line.size() : comma);
    double l = 0.0;
    double f = 0.0;
    // Optional header: a first line whose leading field is not a number.
    if (line_no == 1 && !parse_field(first_field, l)) continue;

    const bool ok = comma != std::string::npos &&
                    line.find(',', comma + 1) == std::string::npos &&
                    parse_field(first_field, l) &&
                    parse_field(std::string_view(line).substr(comma + 1), f);
    if (!ok) {
      throw ProfileParseError(name, line_no, "expected two numeric fields `l,f`");
    }
    if (l < 0.0) throw ProfileParseError(name, line_no, "l must be >= 0");
    if (f < 0.0) throw ProfileParseError(name, line_no, "f must be >= 0");
    if (!grid.empty() && l <= grid.back()) {
      throw ProfileParseError(name, line_no, "l values must be strictly ascending");
    }
    grid.push_back(l);
    values.push_back(f);
  }
  if (grid.size() < 2) {
    throw ProfileParseError(name, line_no, "expected at least 2 data rows");
  }
  return tabulated(std::move(grid), std::move(values), "tabulated:" + name);
}

double RadialProfile::operator()(double l) const {
  switch (kind_) {
    case ProfileKind::gaussian:
      return std::exp(-0.5 * l * l) / kFourPiSq;
    case ProfileKind::exponential:
      return std::exp(-param_ * l);
    case ProfileKind::ball_uniform:
      return l <= param_ ? 1.0 : 0.0;
    case ProfileKind::tabulated:
      return linear_interp(grid_, values_, l);
  }
  return 0.0;
}

double RadialProfile::support_end() const {
  switch (kind_) {
    case ProfileKind::gaussian:
    case ProfileKind::exponential:
      return kInf;
    case ProfileKind::ball_uniform:
      return param_;
    case ProfileKind::tabulated:
      return grid_.back();
  }
  return kInf;
}

double RadialProfile::tabulated_cubic_integral(double l) const {
  if (l <= grid_.front()) return 0.0;
  if (l >= grid_.back()) return prefix_.back();
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), l);
  const std::size_t hi = static_cast<std::size_t>(it - grid_.begin());
  const std::size_t lo = hi - 1;
  const double slope = (values_[hi] - values_[lo]) / (grid_[hi] - grid_[lo]);
  const double intercept = values_[lo] - slope * grid_[lo];
  return prefix_[lo] + cubic_segment_integral(intercept, slope, grid_[lo], l);
}

double third_moment(const RadialProfile& f) {
  switch (f.kind()) {
    case ProfileKind::gaussian:
      return unit_third_moment;
    case ProfileKind::exponential: {
      const double r2 = f.rate() * f.rate();
      return 6.0 / (r2 * r2);
    }
    case ProfileKind::ball_uniform: {
      const double r2 = f.radius() * f.radius();
      return r2 * r2 / 4.0;
    }
    case ProfileKind::tabulated:
      return f.tabulated_cubic_integral(f.grid().back());
  }
  return 0.0;
}

double third_moment_quadrature(const RadialProfile& f, double rel_tol) {
  const auto integrand = [&f](double l) { return l * l * l * f(l); };
  quad::Result r;
  if (std::isfinite(f.support_end())) {
    r = quad::integrate(integrand, 0.0, f.support_end(), rel_tol);
  } else {
    r = quad::integrate_to_infinity(integrand, 0.0, rel_tol);
  }
  if (!r.converged) throw DivergentMomentError{};
  return r.value;
}

NormalizedProfile::NormalizedProfile(RadialProfile profile)
    : profile_(std::move(profile)) {
  const double m3 = third_moment(profile_);
  if (!std::isfinite(m3)) throw DivergentMomentError{};
  if (m3 <= 0.0) throw ZeroMassError{};
  scale_ = 1.0 / (kTwoPiSq * m3);

  if (std::isfinite(profile_.support_end())) {
    l_max_ = profile_.support_end();
  } else {
    // Double until the remaining CDF mass is negligible.
    double l = 1.0;
    while (1.0 - abs_cdf_unclamped(l) > 1e-17 && l < 0x1p60) l *= 2.0;
    l_max_ = l;
  }

  constexpr std::size_t kWarmPoints = 201;
  warm_l_.resize(kWarmPoints);
  warm_cdf_.resize(kWarmPoints);
  for (std::size_t i = 0; i < kWarmPoints; ++i) {
    warm_l_[i] = l_max_ * static_cast<double>(i) / (kWarmPoints - 1);
    warm_cdf_[i] = abs_cdf(warm_l_[i]);
  }
}

double NormalizedProfile::density(double l) const {
  if (!(l >= 0.0)) throw std::invalid_argument("l must be >= 0");
  return scale_ * profile_(l);
}

double NormalizedProfile::abs_density(double l) const {
  if (!(l >= 0.0)) throw std::invalid_argument("l must be >= 0");
  return kTwoPiSq * l * l * l * scale_ * profile_(l);
}

double NormalizedProfile::abs_cdf(double l) const {
  if (!(l >= 0.0)) throw std::invalid_argument("l must be >= 0");
  return std::clamp(abs_cdf_unclamped(l), 0.0, 1.0);
}

double NormalizedProfile::abs_cdf_unclamped(double l) const {
  if (std::isinf(l)) return 1.0;
  switch (profile_.kind()) {
    case ProfileKind::gaussian:
      return gaussian_abs_cdf(l);
    case ProfileKind::exponential:
      return exponential_abs_cdf(profile_.rate(), l);
    case ProfileKind::ball_uniform: {
      if (l >= profile_.radius()) return 1.0;
      const double q = l / profile_.radius();
      return q * q * q * q;
    }
    case ProfileKind::tabulated:
      return kTwoPiSq * scale_ * profile_.tabulated_cubic_integral(l);
  }
  return 0.0;
}

double NormalizedProfile::abs_quantile(double u) const {
  if (!(u >= 0.0) || !(u < 1.0)) {
    throw std::invalid_argument("u must lie in [0, 1)");
  }
  if (u == 0.0) return 0.0;

  // Warm start: smallest table knot with cdf >= u.
  const auto it = std::lower_bound(warm_cdf_.begin(), warm_cdf_.end(), u);
  std::size_t hi_idx = static_cast<std::size_t>(it - warm_cdf_.begin());
  if (hi_idx >= warm_l_.size()) hi_idx = warm_l_.size() - 1;
  double lo = hi_idx == 0 ? 0.0 : warm_l_[hi_idx - 1];
  double hi = warm_l_[hi_idx];

  while (hi - lo > 1e-13 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    const double c = abs_cdf(mid);
    if (std::abs(c - u) <= 1e-13) return mid;
    if (c < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double NormalizedProfile::moment(int k) const {
  if (k < 0 || k > 2) throw std::invalid_argument("moment order must be 0, 1 or 2");
  const auto integrand = [this, k](double l) {
    return std::pow(l, k) * scale_ * profile_(l);
  };
  return quad::integrate(integrand, 0.0, l_max_, 1e-12).value;
}

NormalizedProfile normalize(RadialProfile profile) {
  return NormalizedProfile(std::move(profile));
}

}  // namespace su2meas::radial
