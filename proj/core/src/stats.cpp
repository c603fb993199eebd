#include "su2meas/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "su2meas/errors.hpp"
#include "su2meas/format.hpp"

namespace su2meas::stats {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

/// Regularized lower incomplete gamma P(a, x): series for x < a+1,
/// continued fraction otherwise.
double gammp(double a, double x) {
  if (x <= 0.0) return 0.0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  // Lentz continued fraction for Q(a, x).
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  const double q = std::exp(-x + a * std::log(x) - lg) * h;
  return 1.0 - q;
}

double ks_statistic_sorted(const std::vector<double>& sorted,
                           const std::function<double(double)>& cdf) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max(d, f - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - f);
  }
  return d;
}

double ks_two_sample_statistic(const std::vector<double>& a,
                               const std::vector<double>& b) {
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

}  // namespace

std::string to_json_line(const TestReport& r) {
  std::string out = "{\"name\":\"" + json_escape(r.name) + "\"";
  out += ",\"n\":" + std::to_string(r.n);
  out += ",\"statistic\":" + format_g17(r.statistic);
  out += ",\"threshold\":" + format_g17(r.threshold);
  out += ",\"estimate\":";
  out += r.estimate ? format_g17(*r.estimate) : "null";
  out += ",\"target\":";
  out += r.target ? format_g17(*r.target) : "null";
  out += ",\"pass\":";
  out += r.pass ? "true" : "false";
  out += "}";
  return out;
}

double estimate_chain(const sampler::SampleBatch& batch, double t) {
  if (batch.points.empty()) throw std::invalid_argument("empty batch");
  if (std::isnan(t) || t < 0.0) throw std::invalid_argument("t must be >= 0");
  std::uint64_t count = 0;
  for (const auto& p : batch.points) {
    const double alpha_mag = std::hypot(p.x, p.y);
    const double beta_mag = std::hypot(p.u, p.v);
    if (beta_mag <= t * alpha_mag) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(batch.points.size());
}

double estimate_born(const sampler::SampleBatch& batch, double a_mag,
                     double b_mag) {
  if (std::isnan(a_mag) || std::isnan(b_mag) || a_mag < 0.0 || b_mag < 0.0) {
    throw std::invalid_argument("magnitudes must be >= 0");
  }
  if (a_mag == 0.0 && b_mag == 0.0) throw BothZeroError{};
  if (b_mag == 0.0) return 1.0;
  return estimate_chain(batch, a_mag / b_mag);  // identical predicate
}

TestReport ks_test(std::vector<double> samples,
                   const std::function<double(double)>& cdf, std::string name) {
  if (samples.size() < 10) throw std::invalid_argument("ks_test needs n >= 10");
  std::sort(samples.begin(), samples.end());
  TestReport r;
  r.name = std::move(name);
  r.n = samples.size();
  r.statistic = ks_statistic_sorted(samples, cdf);
  r.threshold = ks_coeff_alpha01 / std::sqrt(static_cast<double>(r.n));
  r.pass = r.statistic <= r.threshold;
  return r;
}

TestReport ks_two_sample(std::vector<double> a, std::vector<double> b,
                         std::string name) {
  if (a.size() < 10 || b.size() < 10) {
    throw std::invalid_argument("ks_two_sample needs n >= 10 on both sides");
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  TestReport r;
  r.name = std::move(name);
  r.n = a.size();
  r.statistic = ks_two_sample_statistic(a, b);
  r.threshold = ks_coeff_alpha01 * std::sqrt((na + nb) / (na * nb));
  r.pass = r.statistic <= r.threshold;
  return r;
}

TestReport invariance_test(const sampler::SampleBatch& batch,
                           const su2::SU2Matrix& u) {
  const std::size_t n = batch.points.size();
  if (n < 1000) throw std::invalid_argument("invariance_test needs n >= 1e3");
  std::vector<double> psi_before, psi_after, l_before, l_after;
  psi_before.reserve(n);
  psi_after.reserve(n);
  l_before.reserve(n);
  l_after.reserve(n);
  for (const auto& w : batch.points) {
    const auto h = coords::to_hopf(w);
    psi_before.push_back(h.psi);
    l_before.push_back(h.l);
    const auto h2 = coords::to_hopf(su2::apply(u, w));
    psi_after.push_back(h2.psi);
    l_after.push_back(h2.l);
  }
  std::sort(psi_before.begin(), psi_before.end());
  std::sort(psi_after.begin(), psi_after.end());
  std::sort(l_before.begin(), l_before.end());
  std::sort(l_after.begin(), l_after.end());
  TestReport r;
  r.name = "su2_invariance";
  r.n = n;
  r.statistic = std::max(ks_two_sample_statistic(psi_before, psi_after),
                         ks_two_sample_statistic(l_before, l_after));
  r.threshold = ks_coeff_alpha01 * std::sqrt(2.0 / static_cast<double>(n));
  r.pass = r.statistic <= r.threshold;
  return r;
}

TestReport chi_square_independence(
    const std::vector<std::vector<std::uint64_t>>& table, std::string name) {
  const std::size_t rows = table.size();
  if (rows < 2 || table[0].size() < 2) {
    throw std::invalid_argument("contingency table must be at least 2x2");
  }
  const std::size_t cols = table[0].size();
  std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (table[i].size() != cols) {
      throw std::invalid_argument("ragged contingency table");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      row_sum[i] += static_cast<double>(table[i][j]);
      col_sum[j] += static_cast<double>(table[i][j]);
      total += static_cast<double>(table[i][j]);
    }
  }
  for (double s : row_sum) {
    if (s == 0.0) throw std::invalid_argument("empty row in contingency table");
  }
  for (double s : col_sum) {
    if (s == 0.0) throw std::invalid_argument("empty column in contingency table");
  }
  double stat = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double expected = row_sum[i] * col_sum[j] / total;
      const double diff = static_cast<double>(table[i][j]) - expected;
      stat += diff * diff / expected;
    }
  }
  TestReport r;
  r.name = std::move(name);
  r.n = static_cast<std::uint64_t>(total);
  r.statistic = stat;
  r.threshold = chi_square_quantile(
      0.99, static_cast<int>((rows - 1) * (cols - 1)));
  r.pass = r.statistic <= r.threshold;
  return r;
}

TestReport estimator_report(std::string name, std::uint64_t n, double estimate,
                            double target, double threshold) {
  TestReport r;
  r.name = std::move(name);
  r.n = n;
  r.estimate = estimate;
  r.target = target;
  r.statistic = std::abs(estimate - target);
  r.threshold = threshold;
  r.pass = r.statistic <= r.threshold;
  return r;
}

double chi_square_quantile(double p, int dof) {
  if (!(p > 0.0) || !(p < 1.0) || dof < 1) {
    throw std::invalid_argument("need 0 < p < 1 and dof >= 1");
  }
  const double a = 0.5 * dof;
  double hi = dof + 10.0;
  while (gammp(a, 0.5 * hi) < p) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (gammp(a, 0.5 * mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double binomial_band(double p, std::uint64_t n, double sigmas) {
  if (!(p >= 0.0) || !(p <= 1.0) || n == 0) {
    throw std::invalid_argument("need p in [0,1] and n >= 1");
  }
  return sigmas * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace su2meas::stats
