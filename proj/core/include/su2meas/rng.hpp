#ifndef SU2MEAS_RNG_HPP
#define SU2MEAS_RNG_HPP

#include <array>
#include <cstdint>
#include <utility>

namespace su2meas {

/// Deterministic pseudorandom stream: a 64-bit seed is expanded with
/// splitmix64 into the 256-bit state of xoshiro256++.
///
/// The generator identity is part of the reproducibility contract: batches
/// are keyed by (generator, seed), so swapping the generator is a breaking
/// format change. Parallel use goes through split(): worker k receives the
/// stream advanced by k jumps of 2^128 steps, and a single stream is never
/// shared between concurrent workers.
class RandomStream {
 public:
  static constexpr const char* generator_name = "splitmix64+xoshiro256++ v1";

  explicit RandomStream(std::uint64_t seed);

  /// Seed this stream was created from (splits keep the parent seed).
  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Two independent standard normals (Marsaglia polar method).
  std::pair<double, double> normal_pair();

  /// Advance by 2^128 steps.
  void jump();

  /// Independent sub-stream for worker `k`: a copy advanced by k jumps.
  RandomStream split(std::uint64_t k) const;

 private:
  std::array<std::uint64_t, 4> state_;
  std::uint64_t seed_;
};

}  // namespace su2meas

#endif  // SU2MEAS_RNG_HPP
