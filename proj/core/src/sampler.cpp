#include "su2meas/sampler.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "su2meas/format.hpp"

namespace su2meas::sampler {

namespace {

coords::CartesianPoint draw_invariant(const radial::NormalizedProfile& nf,
                                      RandomStream& rng) {
  double u1 = rng.uniform01();
  while (u1 == 0.0) u1 = rng.uniform01();
  const double l = nf.abs_quantile(u1);
  const double psi = std::asin(std::sqrt(rng.uniform01()));
  const double phi = coords::two_pi * rng.uniform01();
  const double theta = coords::two_pi * rng.uniform01();
  return coords::from_hopf({l, psi, phi, theta});
}

coords::CartesianPoint draw_gaussian_direct(RandomStream& rng) {
  const auto [x, y] = rng.normal_pair();
  const auto [u, v] = rng.normal_pair();
  return {x, y, u, v};
}

template <class Draw>
void stream_points(
    std::uint64_t n, std::size_t chunk,
    const std::function<void(std::span<const coords::CartesianPoint>)>& sink,
    Draw&& draw) {
  if (n < 1) throw std::invalid_argument("need n >= 1 samples");
  if (chunk < 1) throw std::invalid_argument("chunk must be >= 1");
  std::vector<coords::CartesianPoint> buffer;
  buffer.reserve(std::min<std::uint64_t>(n, chunk));
  std::uint64_t remaining = n;
  while (remaining > 0) {
    const std::size_t take =
        static_cast<std::size_t>(std::min<std::uint64_t>(remaining, chunk));
    buffer.clear();
    for (std::size_t i = 0; i < take; ++i) buffer.push_back(draw());
    sink(std::span<const coords::CartesianPoint>(buffer));
    remaining -= take;
  }
}

}  // namespace

SampleBatch sample_invariant(const measure::InvariantMeasure& m, std::uint64_t n,
                             RandomStream& rng) {
  SampleBatch batch;
  batch.seed = rng.seed();
  batch.profile_id = m.profile().profile().tag();
  batch.points.reserve(n);
  stream_invariant(
      m, n, rng,
      [&batch](std::span<const coords::CartesianPoint> chunk) {
        batch.points.insert(batch.points.end(), chunk.begin(), chunk.end());
      });
  return batch;
}

SampleBatch sample_gaussian_direct(std::uint64_t n, RandomStream& rng) {
  SampleBatch batch;
  batch.seed = rng.seed();
  batch.profile_id = "gaussian-direct";
  batch.points.reserve(n);
  stream_gaussian_direct(
      n, rng,
      [&batch](std::span<const coords::CartesianPoint> chunk) {
        batch.points.insert(batch.points.end(), chunk.begin(), chunk.end());
      });
  return batch;
}

void stream_invariant(
    const measure::InvariantMeasure& m, std::uint64_t n, RandomStream& rng,
    const std::function<void(std::span<const coords::CartesianPoint>)>& sink,
    std::size_t chunk) {
  const radial::NormalizedProfile& nf = m.profile();
  stream_points(n, chunk, sink, [&] { return draw_invariant(nf, rng); });
}

void stream_gaussian_direct(
    std::uint64_t n, RandomStream& rng,
    const std::function<void(std::span<const coords::CartesianPoint>)>& sink,
    std::size_t chunk) {
  stream_points(n, chunk, sink, [&] { return draw_gaussian_direct(rng); });
}

void write_csv_header(std::ostream& out) { out << "x,y,u,v\n"; }

void write_csv_rows(std::span<const coords::CartesianPoint> points,
                    std::ostream& out) {
  for (const auto& p : points) {
    out << format_g17(p.x) << ',' << format_g17(p.y) << ',' << format_g17(p.u)
        << ',' << format_g17(p.v) << '\n';
  }
}

void write_csv(const SampleBatch& batch, std::ostream& out) {
  write_csv_header(out);
  write_csv_rows(batch.points, out);
}

}  // namespace su2meas::sampler
