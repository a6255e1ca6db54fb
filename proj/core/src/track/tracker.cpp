#include "v2vbeam/track/tracker.hpp"

#include "v2vbeam/errors.hpp"

namespace v2vbeam::track {

polar::DetectionSet frame_detections(const sim::Frame& frame,
                                     const polar::MergeTolerance& tol) {
  std::vector<polar::BoundingBox> front, back;
  for (const auto& b : frame.boxes) {
    (b.side == polar::ImageSide::front ? front : back).push_back(b);
  }
  return polar::merge_to_plane(front, back, tol);
}

TrackStep track_step(const polar::PolarPoint& previous,
                     const polar::DetectionSet& detections,
                     std::optional<double> gate) {
  TrackStep step;
  if (detections.empty()) {
    step.point = previous;
    step.outcome = Association::coasted;
    return step;
  }
  const std::size_t idx = nearest_detection(previous, detections);
  const double dist = polar::embedded_distance(previous, detections.points[idx]);
  if (gate && dist > *gate) {
    step.point = previous;
    step.outcome = Association::coasted;
    return step;
  }
  step.point = detections.points[idx];
  step.outcome = Association::matched;
  step.detection_index = idx;
  step.source_id = detections.source_ids[idx];
  return step;
}

Track run_tracker(const IdentifierModel& model,
                  const std::vector<const sim::Frame*>& frames,
                  const std::vector<double>& first_power,
                  const polar::MergeTolerance& merge_tol,
                  std::optional<double> gate) {
  if (frames.empty()) throw DataError("run_tracker: empty frame window");
  Track track;
  track.steps.reserve(frames.size());

  const polar::DetectionSet first = frame_detections(*frames.front(), merge_tol);
  if (first.empty()) {
    throw DataError("run_tracker: sequence rejected, no detections in first frame (t=" +
                    std::to_string(frames.front()->timestamp) + ")");
  }
  const IdentifyResult id = identify(model, first_power, first);
  TrackStep first_step;
  first_step.point = id.point;
  first_step.outcome = Association::matched;
  first_step.detection_index = id.detection_index;
  first_step.source_id = first.source_ids[id.detection_index];
  track.steps.push_back(first_step);

  for (std::size_t i = 1; i < frames.size(); ++i) {
    const polar::DetectionSet dets = frame_detections(*frames[i], merge_tol);
    track.steps.push_back(track_step(track.steps.back().point, dets, gate));
  }
  return track;
}

}  // namespace v2vbeam::track
