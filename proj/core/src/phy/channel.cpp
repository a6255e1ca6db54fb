#include "v2vbeam/phy/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "v2vbeam/rng.hpp"

namespace v2vbeam::phy {

std::vector<double> receive_power(const Channel& channel, const Codebook& codebook,
                                  double symbol_power, double noise_std,
                                  std::uint64_t rng_seed) {
  if (channel.num_antennas != codebook.num_antennas()) {
    throw std::invalid_argument("receive_power: channel/codebook antenna count mismatch");
  }
  const int m_ant = codebook.num_antennas();
  const int q = codebook.beams_per_panel();
  const double amp = std::sqrt(symbol_power);

  std::vector<double> power(static_cast<std::size_t>(kNumPanels) * q, 0.0);
  Rng rng(rng_seed);
  const bool noisy = noise_std > 0.0;
  const double noise_scale = noise_std / std::sqrt(2.0);

  for (Panel p : all_panels()) {
    // Panel channel vector h = sum_l gain_l * a(az_l, el_l).
    CVec h(static_cast<std::size_t>(m_ant), {0.0, 0.0});
    for (const PathComponent& path : channel.paths(p)) {
      const CVec a = steering_vector(m_ant, path.azimuth_rad, path.elevation_rad);
      for (int k = 0; k < m_ant; ++k) {
        h[static_cast<std::size_t>(k)] += path.gain * a[static_cast<std::size_t>(k)];
      }
    }
    const int base = static_cast<int>(p) * q;
    for (int m = 0; m < q; ++m) {
      const CVec& f = codebook.beam(m);
      std::complex<double> y{0.0, 0.0};
      for (int k = 0; k < m_ant; ++k) {
        y += std::conj(f[static_cast<std::size_t>(k)]) * h[static_cast<std::size_t>(k)];
      }
      y *= amp;
      if (noisy) {
        y += std::complex<double>(noise_scale * rng.normal(), noise_scale * rng.normal());
      }
      power[static_cast<std::size_t>(base + m)] = std::norm(y);
    }
  }
  return power;
}

GlobalBeamIndex optimal_beam(const std::vector<double>& power, int beams_per_panel) {
  if (power.empty()) {
    throw std::invalid_argument("optimal_beam: empty power vector");
  }
  std::size_t best = 0;
  for (std::size_t i = 0; i < power.size(); ++i) {
    if (std::isnan(power[i])) {
      throw std::invalid_argument("optimal_beam: NaN power at index " + std::to_string(i));
    }
    if (power[i] > power[best]) best = i;
  }
  return GlobalBeamIndex::from_flat(static_cast<int>(best), beams_per_panel);
}

}  // namespace v2vbeam::phy
