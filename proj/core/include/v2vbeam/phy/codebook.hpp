#pragma once

#include <complex>
#include <string>
#include <vector>

#include "v2vbeam/phy/beam_index.hpp"

namespace v2vbeam::phy {

using CVec = std::vector<std::complex<double>>;

/// Array response of a half-wavelength ULA with M elements:
/// element k = exp(j * pi * k * sin(azimuth) * cos(elevation)).
/// Angles are panel-local radians.
CVec steering_vector(int num_antennas, double azimuth_rad, double elevation_rad);

/// Four-panel beamforming codebook. Each panel holds the same Q unit-norm
/// vectors steering to angles whose sines are uniformly spaced over
/// [-sin(fov/2), +sin(fov/2)].
class Codebook {
 public:
  /// Builds the oversampled DFT-style codebook. Throws std::invalid_argument
  /// for Q < 1, M < 1, or fov outside (0, pi].
  static Codebook make_dft(int num_antennas, int beams_per_panel,
                           double panel_fov_rad);

  int num_antennas() const { return num_antennas_; }
  int beams_per_panel() const { return beams_per_panel_; }
  int total_beams() const { return kNumPanels * beams_per_panel_; }
  double panel_fov_rad() const { return panel_fov_rad_; }

  /// Beamforming vector for a local beam index (identical across panels).
  const CVec& beam(int local_index) const { return beams_.at(local_index); }

  /// Panel-local steering angle of a beam, radians; strictly increasing.
  double steering_angle_rad(int local_index) const {
    return steering_angles_.at(local_index);
  }

  /// Merged-plane angle of a flat beam index, degrees in [0, 360).
  double merged_angle_deg(int flat_index) const;

  /// Spacing to the nearest steering angle neighbor, radians.
  double angle_spacing_rad(int local_index) const;

  GlobalBeamIndex beam_from_flat(int flat) const {
    return GlobalBeamIndex::from_flat(flat, beams_per_panel_);
  }

  /// JSON document with M, Q, panel order, steering angles and interleaved
  /// re/im beam coefficients. See docs in README for the layout.
  std::string to_json() const;
  static Codebook from_json(const std::string& text);

 private:
  Codebook() = default;

  int num_antennas_ = 0;
  int beams_per_panel_ = 0;
  double panel_fov_rad_ = 0.0;
  std::vector<CVec> beams_;
  std::vector<double> steering_angles_;
};

}  // namespace v2vbeam::phy
