#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "v2vbeam/polar/polar.hpp"
#include "v2vbeam/predict/beam_predictor.hpp"
#include "v2vbeam/sim/types.hpp"
#include "v2vbeam/track/identifier.hpp"

namespace v2vbeam::eval {

struct CodebookConfig {
  int num_antennas = 16;
  int beams_per_panel = 64;
  double panel_fov_deg = 90.0;
};

struct AnnotationConfig {
  int frames = 600;
  double train_ratio = 0.7;
};

struct EvaluationConfig {
  int folds = 5;
  std::string fold_mode = "sequence";  // or "scenario"
  int top_k = 5;
};

/// Probabilistic maneuver mix used when scenarios are sampled from a
/// template instead of listed explicitly.
struct ScenarioGeneratorConfig {
  int count = 10;
  sim::ScenarioConfig scenario_template;
  double p_pass = 0.8;
  double p_fall_back = 0.5;
  double p_lane_change = 0.7;
  double p_stop = 0.2;
  double p_clutter_lane_change = 0.3;
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  CodebookConfig codebook;
  polar::MergeTolerance merge;
  std::vector<sim::ScenarioConfig> scenario_list;
  std::optional<ScenarioGeneratorConfig> generator;
  AnnotationConfig annotation;
  track::IdentifierHyperparams identifier;
  predict::PredictorHyperparams predictor;
  int window = 5;  // sequence length r
  EvaluationConfig evaluation;
  std::optional<double> tracker_gate;
  bool save_fold_models = false;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::string& path);

  void validate() const;
};

}  // namespace v2vbeam::eval
