#include "v2vbeam/sim/channel_synth.hpp"

#include <cmath>
#include <stdexcept>

#include "v2vbeam/angles.hpp"
#include "v2vbeam/sim/camera.hpp"

namespace v2vbeam::sim {

namespace {

void add_path(phy::Channel& channel, double azimuth_deg, double elevation_rad,
              double magnitude, double phase) {
  const phy::Panel panel = phy::panel_for_angle_deg(azimuth_deg);
  phy::PathComponent path;
  path.azimuth_rad =
      deg_to_rad(wrap_deg_signed(azimuth_deg - phy::panel_boresight_deg(panel)));
  path.elevation_rad = elevation_rad;
  path.gain = std::polar(magnitude, phase);
  channel.paths(panel).push_back(path);
}

}  // namespace

phy::Channel channel_from_geometry(const std::vector<VehicleState>& states,
                                   const VehicleState& receiver,
                                   const ChannelSynthConfig& config,
                                   int num_antennas, Rng& rng) {
  const VehicleState* tx = nullptr;
  for (const auto& v : states) {
    if (v.role == VehicleRole::transmitter) {
      if (tx) throw std::invalid_argument("channel_from_geometry: multiple transmitters");
      tx = &v;
    }
  }
  if (!tx) throw std::invalid_argument("channel_from_geometry: no transmitter in scene");

  phy::Channel channel;
  channel.num_antennas = num_antennas;
  const auto [azimuth, range] = relative_azimuth_range(*tx, receiver);
  double los_magnitude = 0.0;
  if (range > 1e-6) {
    los_magnitude = config.reference_gain / range;
    add_path(channel, azimuth, 0.0, los_magnitude, rng.uniform(0.0, 2.0 * kPi));
  }
  for (int i = 0; i < config.nlos_paths; ++i) {
    const double az = rng.uniform(0.0, 360.0);
    const double magnitude = config.nlos_gain_ratio * los_magnitude * rng.uniform(0.3, 1.0);
    add_path(channel, az, 0.0, magnitude, rng.uniform(0.0, 2.0 * kPi));
  }
  return channel;
}

}  // namespace v2vbeam::sim
