#pragma once

#include <vector>

#include "v2vbeam/polar/box.hpp"
#include "v2vbeam/rng.hpp"
#include "v2vbeam/sim/types.hpp"

namespace v2vbeam::sim {

/// Emulates the object-detector interface: drops each true box with
/// miss_prob, jitters surviving corner coordinates with Gaussian noise and
/// re-clamps, and appends Poisson(false_positive_rate) spurious boxes that
/// carry no truth id. With all-zero noise the output equals the input.
std::vector<polar::BoundingBox> surrogate_detector(
    const std::vector<polar::BoundingBox>& true_boxes, const DetectorNoise& noise,
    Rng& rng);

}  // namespace v2vbeam::sim
