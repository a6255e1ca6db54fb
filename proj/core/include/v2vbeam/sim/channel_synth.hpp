#pragma once

#include "v2vbeam/phy/channel.hpp"
#include "v2vbeam/rng.hpp"
#include "v2vbeam/sim/types.hpp"

namespace v2vbeam::sim {

/// Derives the geometric channel from vehicle geometry. The line-of-sight
/// path lands in the panel whose sector contains the transmitter azimuth,
/// with |gain| = reference_gain / range and a per-frame random phase;
/// nlos_paths extra paths arrive from random directions with gains scaled
/// by nlos_gain_ratio.
phy::Channel channel_from_geometry(const std::vector<VehicleState>& states,
                                   const VehicleState& receiver,
                                   const ChannelSynthConfig& config,
                                   int num_antennas, Rng& rng);

}  // namespace v2vbeam::sim
