#pragma once

#include <stdexcept>
#include <vector>

#include "relaysim/complex_matrix.hpp"
#include "relaysim/rng.hpp"

namespace relaysim {

/// Per-hop AWGN variances: sigma2_r at the relays, sigma2_d at the destination.
struct NoiseSpec {
  double sigma2_r = 1.0;
  double sigma2_d = 1.0;

  NoiseSpec() = default;
  NoiseSpec(double relay_variance, double destination_variance)
      : sigma2_r(relay_variance), sigma2_d(destination_variance) {
    if (sigma2_r <= 0.0 || sigma2_d <= 0.0) {
      throw std::invalid_argument("noise variances must be strictly positive");
    }
  }
};

/// One block-fading realization: for each relay k, the source->relay matrix
/// f[k] and the relay->destination matrix g[k], both N x N with i.i.d.
/// unit-variance circularly-symmetric complex Gaussian entries (Rayleigh
/// magnitudes). Constant within a time slot, redrawn across slots.
struct ChannelRealization {
  std::vector<Matrix> f;
  std::vector<Matrix> g;
  long slot_index = 0;
};

/// rows x cols matrix of i.i.d. zero-mean circularly-symmetric complex
/// Gaussian entries with total per-entry variance `variance`.
inline Matrix draw_awgn(std::size_t rows, std::size_t cols, double variance, RngStream& rng) {
  if (variance <= 0.0) {
    throw std::invalid_argument("awgn variance must be strictly positive");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rng.cgauss(variance);
    }
  }
  return m;
}

inline ChannelRealization draw_channel(std::size_t n_relays, std::size_t n_antennas,
                                       RngStream& rng, long slot_index = 0) {
  if (n_relays < 1 || n_antennas < 1) {
    throw std::invalid_argument("need at least one relay and one antenna");
  }
  ChannelRealization ch;
  ch.slot_index = slot_index;
  ch.f.reserve(n_relays);
  ch.g.reserve(n_relays);
  for (std::size_t k = 0; k < n_relays; ++k) {
    Matrix f(n_antennas, n_antennas);
    Matrix g(n_antennas, n_antennas);
    for (std::size_t r = 0; r < n_antennas; ++r) {
      for (std::size_t c = 0; c < n_antennas; ++c) {
        f(r, c) = rng.cgauss(1.0);
        g(r, c) = rng.cgauss(1.0);
      }
    }
    ch.f.push_back(std::move(f));
    ch.g.push_back(std::move(g));
  }
  return ch;
}

}  // namespace relaysim
