#pragma once

#include <optional>

namespace v2vbeam::polar {

enum class ImageSide : int { front = 0, back = 1 };

inline const char* image_side_name(ImageSide s) {
  return s == ImageSide::front ? "front" : "back";
}

/// Detected object box in normalized image coordinates. The image origin is
/// top-left and y grows downward, so the bottom-left corner (x1, y1) has
/// y1 > y2 (the top-right corner).
struct BoundingBox {
  ImageSide side = ImageSide::front;
  double x1 = 0.0;  // bottom-left
  double y1 = 0.0;
  double x2 = 0.0;  // top-right
  double y2 = 0.0;
  std::optional<int> truth_vehicle_id;  // absent for false positives
};

}  // namespace v2vbeam::polar
