#include "v2vbeam/predict/beam_predictor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "v2vbeam/angles.hpp"
#include "v2vbeam/errors.hpp"
#include "v2vbeam/nn/checkpoint.hpp"
#include "v2vbeam/nn/train.hpp"
#include "v2vbeam/rng.hpp"

namespace v2vbeam::predict {

namespace {

// (radius, unwrapped angle) rows per step.
std::vector<std::array<double, 2>> track_features(const track::Track& t) {
  std::vector<std::array<double, 2>> rows;
  rows.reserve(t.steps.size());
  double prev_angle = 0.0;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& p = t.steps[i].point;
    double angle = p.angle_deg;
    if (i > 0) {
      angle = prev_angle + wrap_deg_signed(angle - prev_angle);
    }
    prev_angle = angle;
    rows.push_back({p.radius, angle});
  }
  return rows;
}

}  // namespace

std::vector<nn::Vec> BeamPredictorModel::encode(const track::Track& t) const {
  const auto rows = track_features(t);
  std::vector<nn::Vec> steps;
  steps.reserve(rows.size());
  for (const auto& row : rows) {
    nn::Vec v(2);
    for (int c = 0; c < 2; ++c) {
      const auto uc = static_cast<std::size_t>(c);
      v(c) = (row[uc] - feature_min[uc]) / (feature_max[uc] - feature_min[uc]);
    }
    steps.push_back(std::move(v));
  }
  return steps;
}

nlohmann::json BeamPredictorModel::to_json(std::uint64_t seed) const {
  nlohmann::json j;
  j["format"] = "v2vbeam.beam_predictor.v1";
  j["num_classes"] = num_classes;
  j["window"] = window;
  j["feature_min"] = feature_min;
  j["feature_max"] = feature_max;
  j["checkpoint"] = nn::lstm_to_json(net, seed);
  return j;
}

BeamPredictorModel BeamPredictorModel::from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "v2vbeam.beam_predictor.v1") {
    throw DataError("beam predictor checkpoint: unrecognized format");
  }
  BeamPredictorModel m;
  m.num_classes = j.at("num_classes").get<int>();
  m.window = j.at("window").get<int>();
  m.feature_min = j.at("feature_min").get<std::array<double, 2>>();
  m.feature_max = j.at("feature_max").get<std::array<double, 2>>();
  m.net = nn::lstm_from_json(j.at("checkpoint"));
  return m;
}

PredictorTrainResult train_beam_predictor(
    const std::vector<track::Track>& tracks, const std::vector<int>& labels,
    int num_classes, const PredictorHyperparams& hyper, std::uint64_t seed) {
  if (tracks.empty()) throw DataError("train_beam_predictor: empty dataset");
  if (tracks.size() != labels.size()) {
    throw DataError("train_beam_predictor: track/label count mismatch");
  }
  const std::size_t window = tracks.front().length();
  if (window == 0) throw DataError("train_beam_predictor: empty track");
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    if (tracks[i].length() != window) {
      throw DataError("train_beam_predictor: track length mismatch at sample " +
                      std::to_string(i));
    }
    if (labels[i] < 0 || labels[i] >= num_classes) {
      throw DataError("train_beam_predictor: label out of range at sample " +
                      std::to_string(i));
    }
  }

  BeamPredictorModel model;
  model.num_classes = num_classes;
  model.window = static_cast<int>(window);
  model.feature_min = {std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity()};
  model.feature_max = {-std::numeric_limits<double>::infinity(),
                       -std::numeric_limits<double>::infinity()};
  for (const auto& t : tracks) {
    for (const auto& row : track_features(t)) {
      for (std::size_t c = 0; c < 2; ++c) {
        model.feature_min[c] = std::min(model.feature_min[c], row[c]);
        model.feature_max[c] = std::max(model.feature_max[c], row[c]);
      }
    }
  }
  for (std::size_t c = 0; c < 2; ++c) {
    // A constant feature (e.g. co-moving radius) still needs min < max.
    if (model.feature_max[c] - model.feature_min[c] < 1e-6) {
      model.feature_max[c] = model.feature_min[c] + 1e-6;
    }
  }

  model.net = nn::LstmNet::init(2, hyper.hidden_size, hyper.num_layers, num_classes,
                                hyper.dropout, derive_seed(seed, 0x6c73746d /* lstm */));

  nn::SequenceBatch dataset;
  dataset.sequences.reserve(tracks.size());
  dataset.labels = labels;
  for (const auto& t : tracks) dataset.sequences.push_back(model.encode(t));

  nn::FitConfig fit_cfg;
  fit_cfg.epochs = hyper.epochs;
  fit_cfg.batch_size = hyper.batch_size;
  fit_cfg.optimizer.kind = nn::OptimizerKind::adam;
  fit_cfg.optimizer.learning_rate = hyper.learning_rate;
  fit_cfg.optimizer.weight_decay = hyper.weight_decay;
  fit_cfg.seed = derive_seed(seed, 0x666974 /* fit */);

  PredictorTrainResult result;
  result.epoch_losses = nn::fit(model.net, dataset, fit_cfg);
  result.model = std::move(model);
  return result;
}

std::vector<phy::GlobalBeamIndex> predict_beam(const BeamPredictorModel& model,
                                               const track::Track& t, int k,
                                               int beams_per_panel) {
  if (static_cast<int>(t.length()) != model.window) {
    throw std::invalid_argument("predict_beam: track length " +
                                std::to_string(t.length()) + " != window " +
                                std::to_string(model.window));
  }
  if (k < 1 || k > model.num_classes) {
    throw std::invalid_argument("predict_beam: k out of range");
  }
  const nn::Vec logits = model.net.forward(model.encode(t), /*training=*/false);
  std::vector<int> order(static_cast<std::size_t>(model.num_classes));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&logits](int a, int b) { return logits(a) > logits(b); });
  std::vector<phy::GlobalBeamIndex> top;
  top.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    top.push_back(phy::GlobalBeamIndex::from_flat(order[static_cast<std::size_t>(i)],
                                                  beams_per_panel));
  }
  return top;
}

}  // namespace v2vbeam::predict
