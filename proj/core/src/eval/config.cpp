#include "v2vbeam/eval/config.hpp"

#include <fstream>

#include "v2vbeam/errors.hpp"
#include "v2vbeam/sim/manifest.hpp"

namespace v2vbeam::eval {

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["codebook"] = {{"num_antennas", codebook.num_antennas},
                   {"beams_per_panel", codebook.beams_per_panel},
                   {"panel_fov_deg", codebook.panel_fov_deg}};
  j["merge"] = {{"angle_tol_deg", merge.angle_deg}, {"radius_tol", merge.radius}};
  if (generator) {
    j["scenarios"] = {{"count", generator->count},
                      {"template", sim::scenario_to_json(generator->scenario_template)},
                      {"maneuver_probs",
                       {{"pass", generator->p_pass},
                        {"fall_back", generator->p_fall_back},
                        {"lane_change", generator->p_lane_change},
                        {"stop", generator->p_stop},
                        {"clutter_lane_change", generator->p_clutter_lane_change}}}};
  } else {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : scenario_list) list.push_back(sim::scenario_to_json(s));
    j["scenarios"] = {{"list", std::move(list)}};
  }
  j["annotation"] = {{"frames", annotation.frames}, {"train_ratio", annotation.train_ratio}};
  j["identifier"] = {{"hidden_sizes", identifier.hidden_sizes},
                     {"epochs", identifier.epochs},
                     {"batch_size", identifier.batch_size},
                     {"learning_rate", identifier.learning_rate},
                     {"weight_decay", identifier.weight_decay}};
  j["predictor"] = {{"hidden_size", predictor.hidden_size},
                    {"num_layers", predictor.num_layers},
                    {"dropout", predictor.dropout},
                    {"epochs", predictor.epochs},
                    {"batch_size", predictor.batch_size},
                    {"learning_rate", predictor.learning_rate},
                    {"weight_decay", predictor.weight_decay},
                    {"window", window}};
  j["evaluation"] = {{"folds", evaluation.folds},
                     {"fold_mode", evaluation.fold_mode},
                     {"top_k", evaluation.top_k}};
  if (tracker_gate) {
    j["tracker"] = {{"gate", *tracker_gate}};
  } else {
    j["tracker"] = {{"gate", nullptr}};
  }
  j["save_fold_models"] = save_fold_models;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  try {
    ExperimentConfig c;
    c.seed = j.value("seed", c.seed);
    if (j.contains("codebook")) {
      const auto& cb = j.at("codebook");
      c.codebook.num_antennas = cb.value("num_antennas", c.codebook.num_antennas);
      c.codebook.beams_per_panel = cb.value("beams_per_panel", c.codebook.beams_per_panel);
      c.codebook.panel_fov_deg = cb.value("panel_fov_deg", c.codebook.panel_fov_deg);
    }
    if (j.contains("merge")) {
      c.merge.angle_deg = j.at("merge").value("angle_tol_deg", c.merge.angle_deg);
      c.merge.radius = j.at("merge").value("radius_tol", c.merge.radius);
    }
    if (j.contains("scenarios")) {
      const auto& sc = j.at("scenarios");
      if (sc.contains("list")) {
        for (const auto& s : sc.at("list")) {
          c.scenario_list.push_back(sim::scenario_from_json(s));
        }
      } else {
        ScenarioGeneratorConfig gen;
        gen.count = sc.value("count", gen.count);
        if (sc.contains("template")) {
          gen.scenario_template = sim::scenario_from_json(sc.at("template"));
        }
        if (sc.contains("maneuver_probs")) {
          const auto& mp = sc.at("maneuver_probs");
          gen.p_pass = mp.value("pass", gen.p_pass);
          gen.p_fall_back = mp.value("fall_back", gen.p_fall_back);
          gen.p_lane_change = mp.value("lane_change", gen.p_lane_change);
          gen.p_stop = mp.value("stop", gen.p_stop);
          gen.p_clutter_lane_change =
              mp.value("clutter_lane_change", gen.p_clutter_lane_change);
        }
        c.generator = gen;
      }
    }
    if (j.contains("annotation")) {
      c.annotation.frames = j.at("annotation").value("frames", c.annotation.frames);
      c.annotation.train_ratio =
          j.at("annotation").value("train_ratio", c.annotation.train_ratio);
    }
    if (j.contains("identifier")) {
      const auto& id = j.at("identifier");
      c.identifier.hidden_sizes =
          id.value("hidden_sizes", c.identifier.hidden_sizes);
      c.identifier.epochs = id.value("epochs", c.identifier.epochs);
      c.identifier.batch_size = id.value("batch_size", c.identifier.batch_size);
      c.identifier.learning_rate = id.value("learning_rate", c.identifier.learning_rate);
      c.identifier.weight_decay = id.value("weight_decay", c.identifier.weight_decay);
    }
    if (j.contains("predictor")) {
      const auto& p = j.at("predictor");
      c.predictor.hidden_size = p.value("hidden_size", c.predictor.hidden_size);
      c.predictor.num_layers = p.value("num_layers", c.predictor.num_layers);
      c.predictor.dropout = p.value("dropout", c.predictor.dropout);
      c.predictor.epochs = p.value("epochs", c.predictor.epochs);
      c.predictor.batch_size = p.value("batch_size", c.predictor.batch_size);
      c.predictor.learning_rate = p.value("learning_rate", c.predictor.learning_rate);
      c.predictor.weight_decay = p.value("weight_decay", c.predictor.weight_decay);
      c.window = p.value("window", c.window);
    }
    if (j.contains("evaluation")) {
      const auto& e = j.at("evaluation");
      c.evaluation.folds = e.value("folds", c.evaluation.folds);
      c.evaluation.fold_mode = e.value("fold_mode", c.evaluation.fold_mode);
      c.evaluation.top_k = e.value("top_k", c.evaluation.top_k);
    }
    if (j.contains("tracker") && j.at("tracker").contains("gate") &&
        !j.at("tracker").at("gate").is_null()) {
      c.tracker_gate = j.at("tracker").at("gate").get<double>();
    }
    c.save_fold_models = j.value("save_fold_models", c.save_fold_models);
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("experiment config: ") + e.what());
  }
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  return from_json(j);
}

void ExperimentConfig::validate() const {
  if (codebook.num_antennas < 1 || codebook.beams_per_panel < 1) {
    throw ConfigError("codebook sizes must be positive");
  }
  if (codebook.panel_fov_deg <= 0.0 || codebook.panel_fov_deg > 180.0) {
    throw ConfigError("panel_fov_deg must be in (0, 180]");
  }
  if (merge.angle_deg < 0.0 || merge.radius < 0.0) {
    throw ConfigError("merge tolerances must be nonnegative");
  }
  if (!generator && scenario_list.empty()) {
    throw ConfigError("no scenarios configured (need scenarios.list or scenarios.count)");
  }
  if (generator && generator->count < 1) {
    throw ConfigError("scenario generator count must be positive");
  }
  if (annotation.frames < 2) throw ConfigError("annotation.frames must be >= 2");
  if (annotation.train_ratio <= 0.0 || annotation.train_ratio >= 1.0) {
    throw ConfigError("annotation.train_ratio must be in (0,1)");
  }
  if (window < 1) throw ConfigError("predictor.window must be >= 1");
  if (evaluation.folds < 2) throw ConfigError("evaluation.folds must be >= 2");
  if (evaluation.fold_mode != "sequence" && evaluation.fold_mode != "scenario") {
    throw ConfigError("evaluation.fold_mode must be 'sequence' or 'scenario'");
  }
  if (evaluation.top_k < 1 ||
      evaluation.top_k > 4 * codebook.beams_per_panel) {
    throw ConfigError("evaluation.top_k out of range");
  }
  if (identifier.epochs < 1 || predictor.epochs < 1) {
    throw ConfigError("epoch counts must be positive");
  }
}

}  // namespace v2vbeam::eval
