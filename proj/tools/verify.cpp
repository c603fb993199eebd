#include "verify.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "su2meas/coords.hpp"
#include "su2meas/measure.hpp"
#include "su2meas/quadrature.hpp"
#include "su2meas/sampler.hpp"
#include "su2meas/su2.hpp"

namespace su2meas::tools {

namespace {

using su2meas::coords::half_pi;
using su2meas::coords::pi;

stats::TestReport statistic_report(std::string name, std::uint64_t n,
                                   double statistic, double threshold) {
  stats::TestReport r;
  r.name = std::move(name);
  r.n = n;
  r.statistic = statistic;
  r.threshold = threshold;
  r.pass = statistic <= threshold;
  return r;
}

}  // namespace

std::vector<stats::TestReport> run_verify_suite(const VerifyConfig& cfg) {
  if (cfg.n < 1000) {
    throw std::invalid_argument("verify needs n >= 1000");
  }
  std::vector<stats::TestReport> out;
  const measure::InvariantMeasure m(radial::normalize(cfg.profile));
  const auto& nf = m.profile();

  // Closed forms first: the full cone has measure one for every profile.
  out.push_back(stats::estimator_report(
      "cone_full_closed_form", 1,
      m.cone_measure(measure::AngleSet::full()), 1.0, 1e-15));

  {
    RandomStream rng = RandomStream(cfg.seed).split(3);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      double lo = half_pi * rng.uniform01();
      double hi = half_pi * rng.uniform01();
      if (lo > hi) std::swap(lo, hi);
      const double closed = m.cone_measure(measure::AngleSet::interval(lo, hi));
      const double numeric =
          quad::integrate([](double p) { return std::sin(2.0 * p); }, lo, hi,
                          1e-12)
              .value;
      worst = std::max(worst, std::abs(closed - numeric));
    }
    out.push_back(
        statistic_report("cone_quadrature_agreement", 20, worst, 1e-10));
  }

  {
    const double m3 = radial::third_moment_quadrature(cfg.profile, 1e-12);
    const double mass = 2.0 * pi * pi * nf.scale() * m3;
    out.push_back(statistic_report("normalization_quadrature", 1,
                                   std::abs(mass - 1.0), 1e-8));
  }

  // One shared batch drives the marginal and estimator checks.
  RandomStream batch_rng(cfg.seed);
  const auto batch = sampler::sample_invariant(m, cfg.n, batch_rng);

  std::vector<double> psi, l, phi, theta;
  psi.reserve(batch.points.size());
  l.reserve(batch.points.size());
  for (const auto& p : batch.points) {
    const auto h = coords::to_hopf(p);
    psi.push_back(h.psi);
    l.push_back(h.l);
    phi.push_back(h.phi);
    theta.push_back(h.theta);
  }

  const auto sin_sq = [](double p) {
    const double s = std::sin(p);
    return s * s;
  };
  const auto uniform_cdf = [](double a) { return a / coords::two_pi; };
  out.push_back(stats::ks_test(psi, sin_sq, "ks_psi"));
  out.push_back(
      stats::ks_test(l, [&nf](double q) { return nf.abs_cdf(q); }, "ks_abs_w"));
  out.push_back(stats::ks_test(phi, uniform_cdf, "ks_phi"));
  out.push_back(stats::ks_test(theta, uniform_cdf, "ks_theta"));

  for (double t : {0.5, 1.0, 2.0}) {
    const double target = measure::chain_probability(t);
    char name[32];
    std::snprintf(name, sizeof name, "chain_t%g", t);
    out.push_back(stats::estimator_report(
        name, cfg.n, stats::estimate_chain(batch, t), target,
        stats::binomial_band(target, cfg.n)));
  }
  out.push_back(stats::estimator_report(
      "born_2_1", cfg.n, stats::estimate_born(batch, 2.0, 1.0), 0.8,
      stats::binomial_band(0.8, cfg.n)));

  {
    RandomStream haar_rng = RandomStream(cfg.seed).split(1);
    out.push_back(stats::invariance_test(batch, su2::haar_sample(haar_rng)));
  }

  if (cfg.profile.kind() == radial::ProfileKind::gaussian) {
    RandomStream direct_rng = RandomStream(cfg.seed).split(2);
    const auto direct = sampler::sample_gaussian_direct(cfg.n, direct_rng);
    std::vector<double> a_mag, b_mag, psi_d, l_d;
    a_mag.reserve(direct.points.size());
    b_mag.reserve(direct.points.size());
    for (const auto& p : direct.points) {
      a_mag.push_back(std::hypot(p.x, p.y));
      b_mag.push_back(std::hypot(p.u, p.v));
      const auto h = coords::to_hopf(p);
      psi_d.push_back(h.psi);
      l_d.push_back(h.l);
    }
    const auto rayleigh = [](double s) { return 1.0 - std::exp(-0.5 * s * s); };
    out.push_back(stats::ks_test(a_mag, rayleigh, "direct_rayleigh_a"));
    out.push_back(stats::ks_test(b_mag, rayleigh, "direct_rayleigh_b"));
    out.push_back(stats::ks_two_sample(psi, psi_d, "direct_vs_invariant_psi"));
    out.push_back(stats::ks_two_sample(l, l_d, "direct_vs_invariant_l"));

    const auto edge = [](double p) { return std::sqrt(-2.0 * std::log1p(-p)); };
    const double e1 = edge(0.25), e2 = edge(0.50), e3 = edge(0.75);
    const auto bin = [&](double s) {
      return s < e1 ? 0 : s < e2 ? 1 : s < e3 ? 2 : 3;
    };
    std::vector<std::vector<std::uint64_t>> table(
        4, std::vector<std::uint64_t>(4, 0));
    for (std::size_t i = 0; i < a_mag.size(); ++i) {
      ++table[bin(a_mag[i])][bin(b_mag[i])];
    }
    out.push_back(
        stats::chi_square_independence(table, "rayleigh_independence_chi2"));
  }

  return out;
}

}  // namespace su2meas::tools
