#include "v2vbeam/sim/camera.hpp"

#include <algorithm>
#include <cmath>

#include "v2vbeam/angles.hpp"
#include "v2vbeam/polar/polar.hpp"

namespace v2vbeam::sim {

std::pair<double, double> relative_azimuth_range(const VehicleState& target,
                                                 const VehicleState& receiver) {
  const double dx = target.x - receiver.x;
  const double dy = target.y - receiver.y;
  return {wrap_deg(rad_to_deg(std::atan2(dy, dx))), std::hypot(dx, dy)};
}

std::vector<polar::BoundingBox> project_to_cameras(
    const std::vector<VehicleState>& states, const VehicleState& receiver,
    const CameraModel& camera, std::vector<std::string>* warnings) {
  std::vector<polar::BoundingBox> boxes;
  for (const auto& v : states) {
    if (v.id == receiver.id) continue;
    const auto [azimuth, range] = relative_azimuth_range(v, receiver);
    if (range < camera.min_range_m) {
      if (warnings) {
        warnings->push_back("vehicle " + std::to_string(v.id) +
                            " at near-zero range, skipped");
      }
      continue;
    }
    if (range > camera.max_range_m) continue;

    // Silhouette extent of the oriented rectangle seen from `azimuth`.
    const double az_rad = deg_to_rad(azimuth);
    const double extent =
        v.length * std::abs(std::sin(az_rad)) + v.width * std::abs(std::cos(az_rad));
    const double half_width_deg = rad_to_deg(std::atan2(0.5 * extent, range));

    // Front half covers (-90, 90], back half (90, 270].
    const double az_signed = wrap_deg_signed(azimuth - 90.0) + 90.0;  // (-90, 270]
    const bool front = az_signed <= 90.0;
    const double x_center = front ? polar::front_x_from_merged_angle(az_signed)
                                  : polar::back_x_from_merged_angle(az_signed);
    // Both seam maps span 180 degrees per unit of x.
    const double half_width_x = half_width_deg / 180.0;

    const double y_center = camera.horizon_y + camera.range_scale / range;
    const double half_height = 0.5 * camera.box_height_scale * v.height / range;

    polar::BoundingBox box;
    box.side = front ? polar::ImageSide::front : polar::ImageSide::back;
    box.x1 = std::clamp(x_center - half_width_x, 0.0, 1.0);
    box.x2 = std::clamp(x_center + half_width_x, 0.0, 1.0);
    box.y1 = std::clamp(y_center + half_height, 0.0, 1.0);  // bottom (larger y)
    box.y2 = std::clamp(y_center - half_height, 0.0, 1.0);
    box.truth_vehicle_id = v.id;
    if (box.x2 - box.x1 < camera.min_box_size) continue;  // fell off the image edge
    boxes.push_back(box);
  }
  return boxes;
}

}  // namespace v2vbeam::sim
