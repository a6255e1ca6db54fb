#include "v2vbeam/sim/detector.hpp"

#include <algorithm>
#include <cmath>

namespace v2vbeam::sim {

std::vector<polar::BoundingBox> surrogate_detector(
    const std::vector<polar::BoundingBox>& true_boxes, const DetectorNoise& noise,
    Rng& rng) {
  std::vector<polar::BoundingBox> out;
  out.reserve(true_boxes.size());
  for (const auto& box : true_boxes) {
    if (rng.uniform() < noise.miss_prob) continue;
    polar::BoundingBox b = box;
    if (noise.box_jitter_std > 0.0) {
      b.x1 = std::clamp(b.x1 + rng.normal(0.0, noise.box_jitter_std), 0.0, 1.0);
      b.y1 = std::clamp(b.y1 + rng.normal(0.0, noise.box_jitter_std), 0.0, 1.0);
      b.x2 = std::clamp(b.x2 + rng.normal(0.0, noise.box_jitter_std), 0.0, 1.0);
      b.y2 = std::clamp(b.y2 + rng.normal(0.0, noise.box_jitter_std), 0.0, 1.0);
      if (b.x1 > b.x2) std::swap(b.x1, b.x2);
      if (b.y1 < b.y2) std::swap(b.y1, b.y2);  // y1 is the bottom (larger y)
    }
    out.push_back(b);
  }
  const int spurious = rng.poisson(noise.false_positive_rate);
  for (int i = 0; i < spurious; ++i) {
    polar::BoundingBox b;
    b.side = rng.uniform() < 0.5 ? polar::ImageSide::front : polar::ImageSide::back;
    const double w = rng.uniform(0.01, 0.08);
    const double h = rng.uniform(0.01, 0.08);
    const double xc = rng.uniform(w / 2.0, 1.0 - w / 2.0);
    const double yc = rng.uniform(h / 2.0, 1.0 - h / 2.0);
    b.x1 = xc - w / 2.0;
    b.x2 = xc + w / 2.0;
    b.y1 = yc + h / 2.0;
    b.y2 = yc - h / 2.0;
    out.push_back(b);
  }
  return out;
}

}  // namespace v2vbeam::sim
