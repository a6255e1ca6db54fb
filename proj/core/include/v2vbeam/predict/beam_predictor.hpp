#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "v2vbeam/nn/lstm.hpp"
#include "v2vbeam/phy/beam_index.hpp"
#include "v2vbeam/track/tracker.hpp"

namespace v2vbeam::predict {

struct PredictorHyperparams {
  int hidden_size = 150;
  int num_layers = 2;
  double dropout = 0.1;
  int epochs = 200;
  int batch_size = 32;
  double learning_rate = 1e-3;
  double weight_decay = 1e-4;
};

/// LSTM classifier over tracked (radius, angle) sequences. Angles are
/// unwrapped within a track (consecutive steps kept within +-180 deg) before
/// the min-max normalization fitted on the training set, so seam crossings
/// do not inject discontinuities.
struct BeamPredictorModel {
  nn::LstmNet net;
  std::array<double, 2> feature_min{0.0, 0.0};
  std::array<double, 2> feature_max{1.0, 1.0};
  int num_classes = 0;
  int window = 0;  // expected track length r

  std::vector<nn::Vec> encode(const track::Track& t) const;

  nlohmann::json to_json(std::uint64_t seed) const;
  static BeamPredictorModel from_json(const nlohmann::json& j);
};

struct PredictorTrainResult {
  BeamPredictorModel model;
  std::vector<double> epoch_losses;
};

/// Cross-entropy + Adam training over (track, future-beam label) pairs.
/// Labels must be flat indices < num_classes; otherwise the sample is
/// rejected with an error. Deterministic per seed.
PredictorTrainResult train_beam_predictor(
    const std::vector<track::Track>& tracks, const std::vector<int>& labels,
    int num_classes, const PredictorHyperparams& hyper, std::uint64_t seed);

/// Top-k beam indices by descending logit; ties break toward the smaller
/// flat index. Inference only (no dropout). Throws std::invalid_argument on
/// a wrong track length or k outside [1, num_classes].
std::vector<phy::GlobalBeamIndex> predict_beam(const BeamPredictorModel& model,
                                               const track::Track& t, int k,
                                               int beams_per_panel);

}  // namespace v2vbeam::predict
