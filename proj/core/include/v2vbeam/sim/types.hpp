#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "v2vbeam/phy/beam_index.hpp"
#include "v2vbeam/phy/channel.hpp"
#include "v2vbeam/polar/box.hpp"
#include "v2vbeam/polar/polar.hpp"

namespace v2vbeam::sim {

enum class VehicleRole : int { receiver = 0, transmitter = 1, clutter = 2 };

/// State of one vehicle at one sample instant. The road runs along +x;
/// y is the lateral axis, oriented so that angles measured by
/// atan2(y, x) sweep the panels in flat-index order (front, right, back,
/// left). All vehicles head in +x.
struct VehicleState {
  int id = 0;
  VehicleRole role = VehicleRole::clutter;
  double x = 0.0;       // m, longitudinal
  double y = 0.0;       // m, lateral
  double vx = 0.0;      // m/s
  double vy = 0.0;      // m/s
  int lane = 0;
  double length = 4.5;  // m
  double width = 1.9;
  double height = 1.6;
};

struct ManeuverEvent {
  enum class Kind { lane_change, pass, fall_back, stop };
  Kind kind = Kind::pass;
  int vehicle_id = 1;
  double start_s = 0.0;
  double duration_s = 3.0;   // pass/fall_back window; lane-change transition
  double delta_speed = 5.0;  // pass/fall_back magnitude, m/s
  int target_lane = 0;       // lane_change
  double hold_s = 2.0;       // stop: time at standstill
  double accel_s = 2.0;      // stop: ramp back up
};

struct DetectorNoise {
  double miss_prob = 0.0;
  double box_jitter_std = 0.0;
  double false_positive_rate = 0.0;  // Poisson mean per frame
};

struct ChannelSynthConfig {
  double symbol_power = 1.0;
  double noise_std = 0.0;
  int nlos_paths = 0;
  double nlos_gain_ratio = 0.3;
  double reference_gain = 1.0;  // LOS amplitude at 1 m
};

struct CameraModel {
  double horizon_y = 0.5;
  double range_scale = 2.0;       // y_center = horizon_y + range_scale / range
  double box_height_scale = 1.0;  // box height = scale * vehicle height / range
  double max_range_m = 120.0;
  double min_range_m = 0.5;
  double min_box_size = 0.002;
};

struct VehicleSpec {
  double speed = 14.0;
  int lane = 0;
  double offset_m = 0.0;
};

struct ClutterSpec {
  int count = 0;
  int lane_min = -1;
  int lane_max = 1;
  double offset_min = -60.0;
  double offset_max = 60.0;
  double speed_jitter = 5.0;  // clutter speed = receiver speed +- uniform jitter
};

struct ScenarioConfig {
  std::string id = "scenario";
  std::uint64_t seed = 0;
  double duration_s = 30.0;
  double sample_rate_hz = 10.0;
  double lane_width_m = 3.5;
  VehicleSpec receiver{14.0, 0, 0.0};
  VehicleSpec transmitter{14.0, 0, -15.0};
  ClutterSpec clutter;
  std::vector<ManeuverEvent> maneuvers;
  DetectorNoise detector;
  ChannelSynthConfig channel;
  CameraModel camera;

  /// Validates ranges and maneuver consistency; throws ConfigError.
  void validate() const;

  int frame_count() const {
    return static_cast<int>(duration_s * sample_rate_hz + 1e-9);
  }
};

struct FrameTruth {
  int tx_vehicle_id = 1;
  polar::PolarPoint tx_point;      // merged-plane coordinate, noise free
  phy::GlobalBeamIndex beam;       // argmax of the noiseless power sweep
  double rel_speed_mps = 0.0;      // |v_tx - v_rx|
  double range_m = 0.0;
  double azimuth_deg = 0.0;        // true merged-plane azimuth of the tx
};

/// One time step of the pipeline: detections plus the mmWave sweep and the
/// synthetic ground truth. `power` is present iff channel synthesis ran.
struct Frame {
  double timestamp = 0.0;
  std::vector<polar::BoundingBox> boxes;
  std::optional<std::vector<double>> power;
  phy::Channel channel;
  FrameTruth truth;
};

}  // namespace v2vbeam::sim
