#include "v2vbeam/sim/generate.hpp"

#include <cmath>

#include "v2vbeam/errors.hpp"
#include "v2vbeam/rng.hpp"
#include "v2vbeam/sim/camera.hpp"
#include "v2vbeam/sim/channel_synth.hpp"
#include "v2vbeam/sim/detector.hpp"
#include "v2vbeam/sim/kinematics.hpp"

namespace v2vbeam::sim {

namespace {

constexpr std::uint64_t kDetectorStream = 0x646574ull;  // "det"
constexpr std::uint64_t kChannelStream = 0x636861ull;   // "cha"
constexpr std::uint64_t kNoiseStream = 0x6e6f69ull;     // "noi"

}  // namespace

ScenarioRecording generate_dataset(const ScenarioConfig& config,
                                   const phy::Codebook& codebook,
                                   const polar::MergeTolerance& merge_tol) {
  ScenarioRecording rec;
  rec.config = config;
  rec.num_antennas = codebook.num_antennas();
  rec.beams_per_panel = codebook.beams_per_panel();

  const auto kinematics = simulate_kinematics(config);
  const double dt = 1.0 / config.sample_rate_hz;

  for (std::size_t k = 0; k < kinematics.size(); ++k) {
    const auto& states = kinematics[k];
    const VehicleState& receiver = states[0];
    const VehicleState& transmitter = states[1];

    // Noise-free transmitter-only projection defines the truth coordinate.
    const std::vector<VehicleState> tx_only{receiver, transmitter};
    const auto truth_boxes = project_to_cameras(tx_only, receiver, config.camera);
    if (truth_boxes.empty()) {
      rec.warnings.push_back(config.id + ": transmitter out of camera range at t=" +
                             std::to_string(k * dt) + ", frame dropped");
      ++rec.dropped_frames;
      continue;
    }
    std::vector<polar::BoundingBox> truth_front, truth_back;
    for (const auto& b : truth_boxes) {
      (b.side == polar::ImageSide::front ? truth_front : truth_back).push_back(b);
    }
    const auto truth_set = polar::merge_to_plane(truth_front, truth_back, merge_tol);

    Frame frame;
    frame.timestamp = static_cast<double>(k) * dt;

    const auto true_boxes = project_to_cameras(states, receiver, config.camera,
                                               &rec.warnings);
    Rng det_rng(derive_seed(config.seed, (kDetectorStream << 32) | k));
    frame.boxes = surrogate_detector(true_boxes, config.detector, det_rng);

    Rng chan_rng(derive_seed(config.seed, (kChannelStream << 32) | k));
    frame.channel = channel_from_geometry(states, receiver, config.channel,
                                          codebook.num_antennas(), chan_rng);

    const auto noiseless = phy::receive_power(frame.channel, codebook,
                                              config.channel.symbol_power, 0.0, 0);
    frame.truth.beam = phy::optimal_beam(noiseless, codebook.beams_per_panel());
    if (config.channel.noise_std > 0.0) {
      frame.power = phy::receive_power(frame.channel, codebook,
                                       config.channel.symbol_power,
                                       config.channel.noise_std,
                                       derive_seed(config.seed, (kNoiseStream << 32) | k));
    } else {
      frame.power = noiseless;
    }

    frame.truth.tx_vehicle_id = transmitter.id;
    frame.truth.tx_point = truth_set.points.front();
    frame.truth.rel_speed_mps =
        std::hypot(transmitter.vx - receiver.vx, transmitter.vy - receiver.vy);
    const auto [azimuth, range] = relative_azimuth_range(transmitter, receiver);
    frame.truth.azimuth_deg = azimuth;
    frame.truth.range_m = range;

    rec.frames.push_back(std::move(frame));
  }
  return rec;
}

}  // namespace v2vbeam::sim
