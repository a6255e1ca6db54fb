#pragma once

#include <string>
#include <vector>

#include "v2vbeam/phy/codebook.hpp"
#include "v2vbeam/polar/polar.hpp"
#include "v2vbeam/sim/types.hpp"

namespace v2vbeam::sim {

struct ScenarioRecording {
  ScenarioConfig config;
  int num_antennas = 0;
  int beams_per_panel = 0;
  std::vector<Frame> frames;
  std::vector<std::string> warnings;
  int dropped_frames = 0;  // frames where the transmitter left camera range
};

/// Runs the full per-step pipeline (kinematics -> projection -> detector ->
/// channel -> power sweep -> optimal beam) and returns the recorded frames.
/// Deterministic for a fixed config. The truth beam always comes from the
/// noiseless sweep even when the stored power vector is noisy.
ScenarioRecording generate_dataset(const ScenarioConfig& config,
                                   const phy::Codebook& codebook,
                                   const polar::MergeTolerance& merge_tol);

}  // namespace v2vbeam::sim
