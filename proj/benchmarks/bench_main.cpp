#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "su2meas/coords.hpp"
#include "su2meas/measure.hpp"
#include "su2meas/quadrature.hpp"
#include "su2meas/radial.hpp"
#include "su2meas/rng.hpp"
#include "su2meas/sampler.hpp"
#include "su2meas/stats.hpp"
#include "su2meas/su2.hpp"

using namespace su2meas;

namespace {

void BM_HaarSample(benchmark::State& state) {
  RandomStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(su2::haar_sample(rng));
  }
}
BENCHMARK(BM_HaarSample);

void BM_HopfRoundTrip(benchmark::State& state) {
  RandomStream rng(2);
  const coords::CartesianPoint w{rng.uniform01() + 0.1, rng.uniform01(),
                                 rng.uniform01(), rng.uniform01()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coords::from_hopf(coords::to_hopf(w)));
  }
}
BENCHMARK(BM_HopfRoundTrip);

void BM_GaussianQuantile(benchmark::State& state) {
  const auto nf = radial::normalize(radial::RadialProfile::gaussian());
  RandomStream rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf.abs_quantile(rng.uniform01()));
  }
}
BENCHMARK(BM_GaussianQuantile);

void BM_TabulatedQuantile(benchmark::State& state) {
  RandomStream setup(4);
  std::vector<double> grid, values;
  for (int i = 0; i <= 24; ++i) {
    grid.push_back(0.25 * i);
    values.push_back(0.1 + 1.2 * setup.uniform01());
  }
  const auto nf = radial::normalize(
      radial::RadialProfile::tabulated(std::move(grid), std::move(values)));
  RandomStream rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf.abs_quantile(rng.uniform01()));
  }
}
BENCHMARK(BM_TabulatedQuantile);

void BM_SampleInvariant(benchmark::State& state) {
  const measure::InvariantMeasure m(
      radial::normalize(radial::RadialProfile::gaussian()));
  RandomStream rng(6);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler::sample_invariant(m, n, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleInvariant)->Arg(1024)->Arg(65536);

void BM_SampleGaussianDirect(benchmark::State& state) {
  RandomStream rng(7);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler::sample_gaussian_direct(n, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleGaussianDirect)->Arg(1024)->Arg(65536);

void BM_ConeMeasure(benchmark::State& state) {
  const measure::InvariantMeasure m(
      radial::normalize(radial::RadialProfile::gaussian()));
  const auto set = measure::AngleSet({{0.1, 0.4}, {0.6, 1.2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.cone_measure(set));
  }
}
BENCHMARK(BM_ConeMeasure);

void BM_ThirdMomentQuadrature(benchmark::State& state) {
  const auto profile = radial::RadialProfile::gaussian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial::third_moment_quadrature(profile));
  }
}
BENCHMARK(BM_ThirdMomentQuadrature);

void BM_KsTest(benchmark::State& state) {
  RandomStream rng(8);
  std::vector<double> samples(static_cast<std::size_t>(state.range(0)));
  for (auto& s : samples) s = rng.uniform01();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        stats::ks_test(samples, [](double x) { return x; }, "bench"));
  }
}
BENCHMARK(BM_KsTest)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
