#ifndef SU2MEAS_STATS_HPP
#define SU2MEAS_STATS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "su2meas/sampler.hpp"
#include "su2meas/su2.hpp"

namespace su2meas::stats {

/// Asymptotic one-sample Kolmogorov-Smirnov critical coefficient at
/// significance 0.01: threshold = 1.63 / sqrt(n). All suite tests run at
/// n >= 1e3, where the asymptotic form is accurate.
inline constexpr double ks_coeff_alpha01 = 1.63;

/// Outcome of one hypothesis test or estimator check.
/// KS / chi-square reports: pass = (statistic <= threshold).
/// Estimator reports: statistic = |estimate - target|, same rule.
struct TestReport {
  std::string name;
  std::uint64_t n = 0;
  double statistic = 0.0;
  double threshold = 0.0;
  std::optional<double> estimate;
  std::optional<double> target;
  bool pass = false;
};

/// One JSON object per report (JSON-lines). Doubles print with 17
/// significant digits; estimate/target are null when not applicable.
std::string to_json_line(const TestReport& report);

/// Fraction of batch points with |beta| <= t |alpha|; the Monte Carlo
/// estimator of chain_probability(t).
double estimate_chain(const sampler::SampleBatch& batch, double t);

/// Fraction of batch points with a|alpha| >= b|beta|. Shares its predicate
/// with estimate_chain(batch, a/b) when b > 0; b = 0 accepts every point.
double estimate_born(const sampler::SampleBatch& batch, double a_mag,
                     double b_mag);

/// One-sample KS test of `samples` against `cdf` at significance 0.01.
/// Samples are sorted internally; needs n >= 10.
TestReport ks_test(std::vector<double> samples,
                   const std::function<double(double)>& cdf, std::string name);

/// Two-sample KS test at significance 0.01,
/// threshold 1.63 sqrt((n+m)/(nm)).
TestReport ks_two_sample(std::vector<double> a, std::vector<double> b,
                         std::string name);

/// Two-sample KS on the psi- and l-marginals of {w} against {u w}; the
/// report carries the larger statistic, threshold 1.63 sqrt(2/n).
/// Needs n >= 1e3.
TestReport invariance_test(const sampler::SampleBatch& batch,
                           const su2::SU2Matrix& u);

/// Pearson chi-square independence test on a contingency table,
/// threshold the 0.99 chi-square quantile at (r-1)(c-1) dof.
TestReport chi_square_independence(
    const std::vector<std::vector<std::uint64_t>>& table, std::string name);

/// Estimator report: statistic = |estimate - target|.
TestReport estimator_report(std::string name, std::uint64_t n, double estimate,
                            double target, double threshold);

/// Quantile of the chi-square distribution (by bisection on the
/// regularized incomplete gamma).
double chi_square_quantile(double p, int dof);

/// sigmas * sqrt(p (1-p) / n): the tolerance band for a binomial estimate.
double binomial_band(double p, std::uint64_t n, double sigmas = 4.0);

}  // namespace su2meas::stats

#endif  // SU2MEAS_STATS_HPP
