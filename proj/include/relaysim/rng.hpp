#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "relaysim/complex_matrix.hpp"

namespace relaysim {

/// Counter-derived random stream.
///
/// A (seed, stream_id) pair fully determines the draw sequence, so Monte
/// Carlo trials can be farmed out to any number of workers and still
/// reproduce bit for bit: every trial owns its own stream derived from the
/// run seed and the trial's index, never from scheduling order.
///
/// The core generator is the splitmix64 sequence; Gaussians come from a
/// hand-rolled Box-Muller transform rather than std::normal_distribution,
/// whose output is implementation-defined and would break cross-toolchain
/// reproducibility.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : state_(mix(mix(seed) ^ mix(stream_id ^ 0x9e3779b97f4a7c15ull))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix_output(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Circularly-symmetric complex Gaussian with total variance `variance`
  /// (real and imaginary parts each carry variance/2).
  Complex cgauss(double variance) {
    const double s = std::sqrt(variance / 2.0);
    return Complex{s * normal(), s * normal()};
  }

  int bit() { return static_cast<int>(next_u64() >> 63); }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    return mix_output(x);
  }

  static std::uint64_t mix_output(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace relaysim
