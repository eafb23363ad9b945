#pragma once

#include <complex>
#include <cstdint>

namespace gkern {

/// SplitMix64 generator with a portable Box-Muller normal sampler.
///
/// Standard-library distributions are implementation-defined, so every
/// random draw in the library goes through this type to keep reports
/// byte-identical across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  double normal();
  /// Independent standard normal real and imaginary parts.
  std::complex<double> complex_normal();

private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Seed for the `attempt`-th resample derived from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt);

}  // namespace gkern
