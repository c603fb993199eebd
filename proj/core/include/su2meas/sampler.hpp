#ifndef SU2MEAS_SAMPLER_HPP
#define SU2MEAS_SAMPLER_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "su2meas/coords.hpp"
#include "su2meas/measure.hpp"
#include "su2meas/rng.hpp"

namespace su2meas::sampler {

/// A batch of i.i.d. draws of W = (alpha, beta), keyed by the seed and the
/// profile it was drawn from. Points are finite and never the origin.
struct SampleBatch {
  std::vector<coords::CartesianPoint> points;
  std::uint64_t seed = 0;
  std::string profile_id;
};

inline constexpr std::size_t default_chunk = std::size_t{1} << 16;

/// Draw n points of mu_f by factorizing the density in hyperspherical
/// coordinates: per point, four uniforms u1..u4 give
///   l     = abs_quantile(u1)        (|W| has density 2 pi^2 l^3 f(l))
///   psi   = arcsin(sqrt(u2))        (psi has CDF sin^2 psi)
///   phi   = 2 pi u3, theta = 2 pi u4
/// A zero u1 is redrawn so no point lands on the excluded origin.
SampleBatch sample_invariant(const measure::InvariantMeasure& m, std::uint64_t n,
                             RandomStream& rng);

/// Draw n points with four independent standard normal components. The
/// joint density is e^{-|w|^2/2} / (4 pi^2): the gaussian invariant
/// measure, reached without coordinates. |alpha| and |beta| come out
/// Rayleigh(1) and independent.
SampleBatch sample_gaussian_direct(std::uint64_t n, RandomStream& rng);

/// Streaming versions: points are handed to `sink` in chunks of at most
/// `chunk` points to bound memory. One sequential stream feeds the draws,
/// so chunk boundaries never change the sampled sequence.
void stream_invariant(
    const measure::InvariantMeasure& m, std::uint64_t n, RandomStream& rng,
    const std::function<void(std::span<const coords::CartesianPoint>)>& sink,
    std::size_t chunk = default_chunk);
void stream_gaussian_direct(
    std::uint64_t n, RandomStream& rng,
    const std::function<void(std::span<const coords::CartesianPoint>)>& sink,
    std::size_t chunk = default_chunk);

/// CSV with header `x,y,u,v`, one point per row, 17-significant-digit
/// fields (binary round-trip safe).
void write_csv(const SampleBatch& batch, std::ostream& out);
void write_csv_header(std::ostream& out);
void write_csv_rows(std::span<const coords::CartesianPoint> points,
                    std::ostream& out);

}  // namespace su2meas::sampler

#endif  // SU2MEAS_SAMPLER_HPP
