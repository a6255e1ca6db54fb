#pragma once

#include <string>
#include <vector>

#include "v2vbeam/polar/box.hpp"
#include "v2vbeam/sim/types.hpp"

namespace v2vbeam::sim {

/// Projects every non-receiver vehicle into the front/back panorama halves
/// as one bounding box each. The horizontal placement inverts the seam maps
/// declared in the polar module; the vertical center is
/// horizon_y + range_scale / range (nearer vehicles sit lower). Box corners
/// are clamped to [0,1]. Vehicles beyond max_range are dropped; vehicles
/// inside min_range are skipped with a warning appended to `warnings`.
std::vector<polar::BoundingBox> project_to_cameras(
    const std::vector<VehicleState>& states, const VehicleState& receiver,
    const CameraModel& camera, std::vector<std::string>* warnings = nullptr);

/// Receiver-relative merged-plane azimuth (degrees, [0,360)) and range.
std::pair<double, double> relative_azimuth_range(const VehicleState& target,
                                                 const VehicleState& receiver);

}  // namespace v2vbeam::sim
