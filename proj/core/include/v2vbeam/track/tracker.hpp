#pragma once

#include <optional>
#include <vector>

#include "v2vbeam/sim/types.hpp"
#include "v2vbeam/track/identifier.hpp"

namespace v2vbeam::track {

enum class Association : int { matched = 0, coasted = 1 };

struct TrackStep {
  polar::PolarPoint point;
  Association outcome = Association::matched;
  std::optional<std::size_t> detection_index;  // present iff matched
  std::optional<int> source_id;                // truth id of the matched detection
};

/// Transmitter trajectory over one observation window; steps.size() grows to
/// the window length r. The first step comes from identification, the rest
/// from nearest-distance association.
struct Track {
  std::vector<TrackStep> steps;

  std::size_t length() const { return steps.size(); }
  int coasted_count() const {
    int n = 0;
    for (const auto& s : steps) n += s.outcome == Association::coasted ? 1 : 0;
    return n;
  }
};

/// Merged detections of one frame.
polar::DetectionSet frame_detections(const sim::Frame& frame,
                                     const polar::MergeTolerance& tol);

/// Nearest-distance association. With no detections, or when the nearest
/// candidate exceeds `gate`, the previous point coasts unchanged.
TrackStep track_step(const polar::PolarPoint& previous,
                     const polar::DetectionSet& detections,
                     std::optional<double> gate = std::nullopt);

/// Identification on the first frame (which owns the power vector), then
/// association across the remaining frames. Throws DataError when the first
/// frame has no detections (the sequence is unusable).
Track run_tracker(const IdentifierModel& model,
                  const std::vector<const sim::Frame*>& frames,
                  const std::vector<double>& first_power,
                  const polar::MergeTolerance& merge_tol,
                  std::optional<double> gate = std::nullopt);

}  // namespace v2vbeam::track
