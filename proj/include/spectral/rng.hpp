#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace spectral {

// Counter-style stream derivation: every (master_seed, n, trial, kind) tuple
// maps to its own generator state, so results do not depend on the order in
// which streams are consumed.

namespace detail {

// splitmix64 finalizer (Steele/Lea/Flood). Bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

enum class StreamKind : std::uint64_t {
  Noise = 0x6e6f697365ull,
  Measure = 0x6d656173ull,
  Probe = 0x70726f6265ull,
};

/// Small deterministic generator (splitmix64 sequence). Not cryptographic;
/// statistically solid for Monte Carlo use and identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(detail::mix64(seed)) {}

  static Rng stream(std::uint64_t master_seed, std::uint64_t n,
                    std::uint64_t trial_index, StreamKind kind) {
    std::uint64_t s = detail::mix64(master_seed);
    s = detail::mix64(s ^ detail::mix64(n * 0x9e3779b97f4a7c15ull));
    s = detail::mix64(s ^ detail::mix64(trial_index * 0xd1b54a32d192ed03ull));
    s = detail::mix64(s ^ static_cast<std::uint64_t>(kind));
    return Rng(s);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [low, high).
  double uniform(double low, double high) {
    return low + (high - low) * uniform();
  }

  /// Exp(1) variate. Strictly positive.
  double exponential() {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    return -std::log(u);
  }

  /// Standard complex Gaussian with E|z|^2 = 1: real and imaginary parts
  /// independent N(0, 1/2). Box-Muller in polar form, one value per call.
  std::complex<double> gaussian_complex() {
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2.0 * M_PI * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  std::uint64_t state_;
};

}  // namespace spectral
