#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "su2meas/coords.hpp"
#include "su2meas/errors.hpp"
#include "su2meas/measure.hpp"
#include "su2meas/radial.hpp"
#include "su2meas/sampler.hpp"
#include "su2meas/stats.hpp"
#include "su2meas/su2.hpp"

using namespace su2meas;
using namespace su2meas::stats;
using su2meas::coords::CartesianPoint;
using su2meas::coords::half_pi;

namespace {

sampler::SampleBatch direct_batch(std::uint64_t n, std::uint64_t seed) {
  RandomStream rng(seed);
  return sampler::sample_gaussian_direct(n, rng);
}

double sin_sq(double psi) {
  const double s = std::sin(psi);
  return s * s;
}

std::vector<double> batch_psi(const sampler::SampleBatch& batch) {
  std::vector<double> psi;
  psi.reserve(batch.points.size());
  for (const auto& p : batch.points) psi.push_back(coords::to_hopf(p).psi);
  return psi;
}

}  // namespace

TEST_CASE("ks_test accepts samples drawn from the hypothesized cdf") {
  RandomStream rng(606);
  std::vector<double> uniform(100000);
  for (auto& u : uniform) u = rng.uniform01();
  const auto r = ks_test(uniform, [](double x) { return x; }, "uniform");
  CHECK(r.pass);
  CHECK(r.threshold == doctest::Approx(1.63 / std::sqrt(1e5)));
  CHECK(r.n == 100000);

  const auto batch = direct_batch(100000, 707);
  CHECK(ks_test(batch_psi(batch), sin_sq, "psi").pass);
}

TEST_CASE("ks_test rejects a wrong cdf decisively") {
  const auto batch = direct_batch(100000, 808);
  const auto linear = [](double p) { return p / half_pi; };
  const auto r = ks_test(batch_psi(batch), linear, "psi_vs_linear");
  CHECK_FALSE(r.pass);
  // sup |sin^2(psi) - psi/(pi/2)| is about 0.105, far past the threshold
  CHECK(r.statistic > 0.09);
  CHECK(r.statistic > 10.0 * r.threshold);
}

TEST_CASE("ks_test false-positive rate stays near its significance level") {
  int failures = 0;
  const int runs = 200;
  for (int k = 0; k < runs; ++k) {
    RandomStream rng(90000 + k);
    std::vector<double> u(10000);
    for (auto& x : u) x = rng.uniform01();
    if (!ks_test(u, [](double x) { return x; }, "calibration").pass) ++failures;
  }
  CHECK(failures <= 6);  // 3% of 200 at alpha = 0.01
}

TEST_CASE("ks_test enforces its minimum sample size") {
  std::vector<double> tiny(5, 0.5);
  CHECK_THROWS_AS(ks_test(tiny, [](double x) { return x; }, "tiny"),
                  std::invalid_argument);
}

TEST_CASE("two-sample ks distinguishes equal from shifted samples") {
  RandomStream rng(111);
  std::vector<double> a(20000), b(20000), shifted(20000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = rng.uniform01();
    b[i] = rng.uniform01();
    shifted[i] = rng.uniform01() + 0.05;
  }
  CHECK(ks_two_sample(a, b, "same_law").pass);
  CHECK_FALSE(ks_two_sample(a, shifted, "shifted").pass);
}

TEST_CASE("estimate_chain approaches the closed form") {
  const auto batch = direct_batch(1000000, 909);

  CHECK(estimate_chain(batch, 1e6) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::abs(estimate_chain(batch, 1.0) - 0.5) <= 0.002);
  CHECK(std::abs(estimate_chain(batch, 2.0) - 0.8) <= 0.0016);
  CHECK(std::abs(estimate_chain(batch, 0.5) - 0.2) <= 0.0016);
}

TEST_CASE("estimate_born mirrors estimate_chain and handles the edge cases") {
  const auto batch = direct_batch(1000000, 1010);

  CHECK(std::abs(estimate_born(batch, 1.0, 1.0) - 0.5) <= 0.002);
  CHECK(std::abs(estimate_born(batch, 1.0, 2.0) - 0.2) <= 0.0016);
  CHECK(estimate_born(batch, 1.0, 0.0) == 1.0);
  CHECK(estimate_born(batch, 2.0, 1.0) ==
        estimate_chain(batch, 2.0));  // same predicate, same bits
  CHECK_THROWS_AS(estimate_born(batch, 0.0, 0.0), BothZeroError);

  sampler::SampleBatch empty;
  CHECK_THROWS_AS(estimate_chain(empty, 1.0), std::invalid_argument);
}

TEST_CASE("invariance_test: identity is exact, Haar rotations pass") {
  const auto batch = direct_batch(100000, 1111);
  const auto id_report = invariance_test(batch, su2::SU2Matrix::identity());
  CHECK(id_report.statistic == 0.0);
  CHECK(id_report.pass);

  RandomStream rng(1212);
  const auto r = invariance_test(batch, su2::haar_sample(rng));
  CHECK(r.pass);
  CHECK(r.threshold == doctest::Approx(1.63 * std::sqrt(2.0 / 1e5)));
}

TEST_CASE("invariance_test flags a batch that is not rotation invariant") {
  // all mass on the alpha axis: any generic rotation moves psi off zero
  sampler::SampleBatch axis;
  RandomStream rng(1313);
  for (int i = 0; i < 2000; ++i) {
    axis.points.push_back(CartesianPoint{1.0 + rng.uniform01(), 0.0, 0.0, 0.0});
  }
  RandomStream rh(1414);
  const auto r = invariance_test(axis, su2::haar_sample(rh));
  CHECK_FALSE(r.pass);

  sampler::SampleBatch small;
  small.points.resize(100, CartesianPoint{1, 0, 0, 0});
  CHECK_THROWS_AS(invariance_test(small, su2::SU2Matrix::identity()),
                  std::invalid_argument);
}

TEST_CASE("chi-square quantiles match the table") {
  CHECK(chi_square_quantile(0.99, 9) == doctest::Approx(21.666).epsilon(1e-4));
  CHECK(chi_square_quantile(0.99, 1) == doctest::Approx(6.6349).epsilon(1e-4));
  CHECK(chi_square_quantile(0.99, 10) == doctest::Approx(23.2093).epsilon(1e-4));
  CHECK(chi_square_quantile(0.95, 4) == doctest::Approx(9.4877).epsilon(1e-4));
  CHECK_THROWS_AS(chi_square_quantile(1.5, 3), std::invalid_argument);
}

TEST_CASE("chi-square independence test on crafted tables") {
  // balanced table: no association
  std::vector<std::vector<std::uint64_t>> flat(4,
                                               std::vector<std::uint64_t>(4, 625));
  const auto ok = chi_square_independence(flat, "flat");
  CHECK(ok.statistic == 0.0);
  CHECK(ok.pass);

  // diagonal concentration: strong association
  std::vector<std::vector<std::uint64_t>> diag(4,
                                               std::vector<std::uint64_t>(4, 100));
  for (int i = 0; i < 4; ++i) diag[i][i] = 700;
  CHECK_FALSE(chi_square_independence(diag, "diag").pass);

  CHECK_THROWS_AS(chi_square_independence({{1, 2}}, "thin"),
                  std::invalid_argument);
}

TEST_CASE("estimator reports encode the tolerance rule") {
  const auto pass = estimator_report("e", 100, 0.52, 0.5, 0.05);
  CHECK(pass.pass);
  CHECK(pass.statistic == doctest::Approx(0.02));
  const auto fail = estimator_report("e", 100, 0.58, 0.5, 0.05);
  CHECK_FALSE(fail.pass);
}

TEST_CASE("reports serialize as one JSON object per line") {
  TestReport r;
  r.name = "ks_psi";
  r.n = 5;
  r.statistic = 0.5;
  r.threshold = 1.0;
  r.pass = true;
  CHECK(to_json_line(r) ==
        "{\"name\":\"ks_psi\",\"n\":5,\"statistic\":0.5,\"threshold\":1,"
        "\"estimate\":null,\"target\":null,\"pass\":true}");

  const auto est = estimator_report("chain_t2", 1000000, 0.800022, 0.8, 0.0016);
  const auto line = to_json_line(est);
  CHECK(line.find("\"estimate\":0.800022") != std::string::npos);
  CHECK(line.find("\"target\":0.8") != std::string::npos);
  CHECK(line.find("\"pass\":true") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("binomial bands") {
  CHECK(binomial_band(0.5, 1000000) == doctest::Approx(0.002));
  CHECK(binomial_band(0.8, 1000000) == doctest::Approx(0.0016));
  CHECK_THROWS_AS(binomial_band(1.5, 10), std::invalid_argument);
}
