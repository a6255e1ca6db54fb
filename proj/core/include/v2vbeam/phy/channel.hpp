#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "v2vbeam/phy/beam_index.hpp"
#include "v2vbeam/phy/codebook.hpp"

namespace v2vbeam::phy {

/// One propagation path as seen by a single panel. Azimuth is panel-local
/// (0 = panel boresight), radians in (-pi, pi]; elevation in [-pi/2, pi/2].
struct PathComponent {
  std::complex<double> gain;
  double azimuth_rad = 0.0;
  double elevation_rad = 0.0;
};

/// Geometric channel: per-panel path lists. All four panels are always
/// present, possibly with empty lists.
struct Channel {
  std::array<std::vector<PathComponent>, kNumPanels> per_panel;
  int num_antennas = 0;

  std::vector<PathComponent>& paths(Panel p) {
    return per_panel[static_cast<int>(p)];
  }
  const std::vector<PathComponent>& paths(Panel p) const {
    return per_panel[static_cast<int>(p)];
  }
};

/// Sweeps every codebook beam and returns |y|^2 per flat index, where
/// y = f^H h * sqrt(symbol_power) + n and n is circular complex Gaussian
/// with variance noise_std^2. With noise_std = 0 the result is the exact
/// noiseless power and rng_seed is unused.
std::vector<double> receive_power(const Channel& channel, const Codebook& codebook,
                                  double symbol_power, double noise_std,
                                  std::uint64_t rng_seed);

/// Argmax over the power sweep; ties break toward the smallest flat index.
/// Throws std::invalid_argument on NaN entries or an empty vector.
GlobalBeamIndex optimal_beam(const std::vector<double>& power, int beams_per_panel);

}  // namespace v2vbeam::phy
