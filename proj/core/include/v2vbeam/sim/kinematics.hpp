#pragma once

#include <vector>

#include "v2vbeam/sim/types.hpp"

namespace v2vbeam::sim {

/// Per-frame vehicle states, indexed [frame][vehicle]. Vehicle 0 is the
/// receiver, vehicle 1 the transmitter, clutter follows. Motion is constant
/// velocity integrated at the sample rate, with scripted maneuvers: lane
/// changes blend laterally along a sigmoid, pass/fall_back add a speed delta
/// over their window, stop ramps the speed to zero and back. Deterministic
/// for a fixed config.
std::vector<std::vector<VehicleState>> simulate_kinematics(const ScenarioConfig& config);

}  // namespace v2vbeam::sim
