#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace ialign {

// Stream tags for deriving independent substreams from one seed. Channel
// generation and swarm randomness use separate streams so that changing
// optimizer settings never changes the channel realization.
inline constexpr std::uint64_t kChannelStream = 0x11;
inline constexpr std::uint64_t kSwarmStream = 0x22;

// Seedable random source. Every draw is derived from the raw mt19937_64
// output with fixed arithmetic (no std distributions), so a seed yields the
// same sequence on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent substream obtained by mixing a seed with a stream tag.
  static Rng stream(std::uint64_t seed, std::uint64_t tag) {
    return Rng(mix(mix(seed) + tag));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform index in {0, ..., n-1}.
  int index(int n) { return static_cast<int>(uniform() * static_cast<double>(n)); }

  // Circularly symmetric complex Gaussian with zero mean and unit variance,
  // i.e. real and imaginary parts each N(0, 1/2). Consumes two uniforms.
  std::complex<double> complex_gaussian() {
    const double radius = std::sqrt(-std::log1p(-uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace ialign
