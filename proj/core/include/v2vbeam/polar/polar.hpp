#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "v2vbeam/polar/box.hpp"

namespace v2vbeam::polar {

/// Point on the merged top-down plane. Angle is degrees in [0, 360) with
/// 0 = vehicle forward, sweeping front -> right -> back -> left panels in
/// the order of increasing angle. Radius is the image-plane distance from
/// the bottom-center reference, so it lives in [0, ~1.118].
struct PolarPoint {
  double radius = 0.0;
  double angle_deg = 0.0;
};

/// Midpoint of the box corners, in [0,1]^2. Degenerate (zero-area) boxes are
/// accepted; the center is still defined.
std::pair<double, double> box_center(const BoundingBox& box);

/// Image-local polar transform with reference point (0.5, 1.0) and the
/// up-positive vector (x_c - 0.5, 1.0 - y_c). Returns (radius, angle in
/// degrees); the angle is in [0, 180] for centers inside the image. A center
/// exactly at the reference maps to (0, 0).
std::pair<double, double> image_polar(double x_center, double y_center);

/// Linear seam maps between image x and merged-plane angle. Front covers
/// (-90, 90] and back (90, 270]; both are continuous at the shared seams.
double merged_angle_from_front_x(double x_center);
double merged_angle_from_back_x(double x_center);
double front_x_from_merged_angle(double angle_deg);
double back_x_from_merged_angle(double angle_deg);

std::pair<double, double> polar_to_cartesian(const PolarPoint& p);
PolarPoint cartesian_to_polar(double u, double v);

/// Euclidean distance between the cartesian embeddings of two points.
/// Identification and tracking measure distances here to avoid the 0/360
/// wrap discontinuity.
double embedded_distance(const PolarPoint& a, const PolarPoint& b);

struct MergeTolerance {
  double angle_deg = 5.0;
  double radius = 0.1;
};

/// Merged detections of one frame, ordered by ascending angle. source_ids
/// aligns with points; a merged cluster keeps the id only when all of its
/// members agreed on it.
struct DetectionSet {
  std::vector<PolarPoint> points;
  std::vector<std::optional<int>> source_ids;

  /// Flat interleaved (radius, angle) vector of length 2 * points.size().
  std::vector<double> flattened() const;
  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

/// Maps front/back boxes onto the merged plane and coalesces clusters of
/// points that fall within both tolerances of each other (circular-mean
/// angle, mean radius). This folds seam-split detections of one vehicle
/// into a single point. Output is sorted by ascending merged angle.
DetectionSet merge_to_plane(const std::vector<BoundingBox>& front_boxes,
                            const std::vector<BoundingBox>& back_boxes,
                            const MergeTolerance& tol);

}  // namespace v2vbeam::polar
