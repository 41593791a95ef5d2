#pragma once

#include <bit>
#include <cstdint>

namespace bellsim {

// splitmix64 finalizer. Full-avalanche mix of a 64-bit word; the basis of
// RandomStream and of all stream-key derivation below.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

// Derives an independent stream seed from a parent seed and a key.
// Chain calls for composite keys: seed_mix(seed_mix(seed, a), b).
constexpr std::uint64_t seed_mix(std::uint64_t seed, std::uint64_t key) noexcept {
  return mix64(seed ^ mix64(key + kGoldenGamma));
}

// Key a stream by a real-valued coordinate (e.g. a sweep grid value), so
// that a cell's randomness depends on its coordinates, not its position in
// the grid. -0.0 is canonicalized to 0.0.
inline std::uint64_t hash_double(double value) noexcept {
  if (value == 0.0) value = 0.0;
  return std::bit_cast<std::uint64_t>(value);
}

// Small counter-based PRNG (splitmix64). One instance per (seed, trial,
// channel) key gives reproducible results independent of batching or
// thread count; construction costs one addition.
class RandomStream {
 public:
  explicit constexpr RandomStream(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next_u64() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // Exponential with the given mean (mean > 0); returns 0 when the
  // underlying uniform draw is 0.
  double exponential(double mean) noexcept;

  // Box-Muller, one variate per call (consumes two uniforms).
  double normal(double mean, double stddev) noexcept;

  // Direct (product-of-uniforms) sampling for small means, normal
  // approximation above kPoissonDirectLimit.
  std::uint64_t poisson(double mean) noexcept;

  static constexpr double kPoissonDirectLimit = 30.0;

 private:
  std::uint64_t state_;
};

}  // namespace bellsim
