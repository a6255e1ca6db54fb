#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "v2vbeam/nn/dense.hpp"
#include "v2vbeam/polar/polar.hpp"

namespace v2vbeam::track {

/// FCN that regresses the transmitter's merged-plane coordinate from the
/// receive-power sweep, plus the normalization fitted on the training split:
/// powers divide by the global training maximum, coordinates are min-max
/// normalized per component (radius, angle).
struct IdentifierModel {
  nn::DenseNet net;
  double power_norm = 1.0;
  std::array<double, 2> coord_min{0.0, 0.0};
  std::array<double, 2> coord_max{1.0, 1.0};

  polar::PolarPoint predict(const std::vector<double>& power) const;

  nlohmann::json to_json(std::uint64_t seed) const;
  static IdentifierModel from_json(const nlohmann::json& j);
};

/// Annotated sample: the power sweep, the truth coordinate regressed
/// against, and the frame's merged detections for selection accuracy.
struct AnnotatedFrame {
  std::vector<double> power;
  polar::PolarPoint truth;
  int truth_vehicle_id = 1;
  polar::DetectionSet detections;
};

struct IdentifierHyperparams {
  std::vector<int> hidden_sizes{256, 256};
  int epochs = 100;
  int batch_size = 32;
  double learning_rate = 1e-2;
  double weight_decay = 1e-4;
};

struct IdentifierTrainResult {
  IdentifierModel model;
  std::optional<double> test_r2;                       // mean over usable components
  std::vector<std::optional<double>> per_component_r2;  // radius, angle
  double test_top1 = 0.0;
  int test_top1_evaluated = 0;  // frames with at least one detection
  int train_count = 0;
  int test_count = 0;
  std::vector<double> epoch_losses;
};

/// Fits normalization on the training split only, trains with MSE + AdamW,
/// and reports test R^2 plus nearest-distance identification accuracy.
/// Throws DataError on a degenerate coordinate range or non-positive powers.
IdentifierTrainResult train_identifier(const std::vector<AnnotatedFrame>& annotated,
                                       double split_ratio,
                                       const IdentifierHyperparams& hyper,
                                       std::uint64_t seed);

/// Nearest detection to `point` in the cartesian embedding; ties break
/// toward the smaller detection index.
std::size_t nearest_detection(const polar::PolarPoint& point,
                              const polar::DetectionSet& detections);

struct IdentifyResult {
  polar::PolarPoint point;      // the matched detection's coordinate
  std::size_t detection_index;  // into the DetectionSet
  polar::PolarPoint predicted;  // raw FCN output, de-normalized
};

/// FCN prediction followed by the nearest-distance selection. Throws
/// DataError when the frame has no detections.
IdentifyResult identify(const IdentifierModel& model, const std::vector<double>& power,
                        const polar::DetectionSet& detections);

}  // namespace v2vbeam::track
