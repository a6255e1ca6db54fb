#include "v2vbeam/track/identifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "v2vbeam/angles.hpp"
#include "v2vbeam/errors.hpp"
#include "v2vbeam/nn/checkpoint.hpp"
#include "v2vbeam/nn/train.hpp"
#include "v2vbeam/rng.hpp"

namespace v2vbeam::track {

namespace {

nn::Vec normalize_power(const std::vector<double>& power, double power_norm) {
  nn::Vec x(static_cast<Eigen::Index>(power.size()));
  for (std::size_t i = 0; i < power.size(); ++i) {
    x(static_cast<Eigen::Index>(i)) = power[i] / power_norm;
  }
  return x;
}

// R^2 per component; a constant truth component is reported as nullopt.
std::vector<std::optional<double>> r2_per_component(
    const std::vector<std::array<double, 2>>& predicted,
    const std::vector<std::array<double, 2>>& truth) {
  std::vector<std::optional<double>> out;
  for (int c = 0; c < 2; ++c) {
    double mean = 0.0;
    for (const auto& t : truth) mean += t[static_cast<std::size_t>(c)];
    mean /= static_cast<double>(truth.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      const double t = truth[i][static_cast<std::size_t>(c)];
      const double p = predicted[i][static_cast<std::size_t>(c)];
      ss_res += (t - p) * (t - p);
      ss_tot += (t - mean) * (t - mean);
    }
    if (ss_tot <= 0.0) {
      out.push_back(std::nullopt);
    } else {
      out.push_back(1.0 - ss_res / ss_tot);
    }
  }
  return out;
}

}  // namespace

polar::PolarPoint IdentifierModel::predict(const std::vector<double>& power) const {
  const nn::Vec out = net.forward(normalize_power(power, power_norm));
  polar::PolarPoint p;
  p.radius = coord_min[0] + out(0) * (coord_max[0] - coord_min[0]);
  p.angle_deg = wrap_deg(coord_min[1] + out(1) * (coord_max[1] - coord_min[1]));
  p.radius = std::max(0.0, p.radius);
  return p;
}

nlohmann::json IdentifierModel::to_json(std::uint64_t seed) const {
  nlohmann::json j;
  j["format"] = "v2vbeam.identifier.v1";
  j["power_norm"] = power_norm;
  j["coord_min"] = coord_min;
  j["coord_max"] = coord_max;
  j["checkpoint"] = nn::dense_to_json(net, seed);
  return j;
}

IdentifierModel IdentifierModel::from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "v2vbeam.identifier.v1") {
    throw DataError("identifier checkpoint: unrecognized format");
  }
  IdentifierModel m;
  m.power_norm = j.at("power_norm").get<double>();
  m.coord_min = j.at("coord_min").get<std::array<double, 2>>();
  m.coord_max = j.at("coord_max").get<std::array<double, 2>>();
  m.net = nn::dense_from_json(j.at("checkpoint"));
  return m;
}

IdentifierTrainResult train_identifier(const std::vector<AnnotatedFrame>& annotated,
                                       double split_ratio,
                                       const IdentifierHyperparams& hyper,
                                       std::uint64_t seed) {
  if (annotated.size() < 2) {
    throw DataError("train_identifier: need at least two annotated frames");
  }
  if (split_ratio <= 0.0 || split_ratio >= 1.0) {
    throw ConfigError("train_identifier: split ratio must be in (0,1)");
  }

  std::vector<std::size_t> order(annotated.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(derive_seed(seed, 0x73706c69 /* spli */));
  rng.shuffle(order);
  const std::size_t n_train = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::round(split_ratio * static_cast<double>(order.size()))),
      1, order.size() - 1);

  IdentifierTrainResult result;
  result.train_count = static_cast<int>(n_train);
  result.test_count = static_cast<int>(order.size() - n_train);

  // Normalization constants come from the training split only.
  double power_max = 0.0;
  std::array<double, 2> cmin{std::numeric_limits<double>::infinity(),
                             std::numeric_limits<double>::infinity()};
  std::array<double, 2> cmax{-std::numeric_limits<double>::infinity(),
                             -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n_train; ++i) {
    const auto& frame = annotated[order[i]];
    for (double p : frame.power) power_max = std::max(power_max, p);
    const std::array<double, 2> c{frame.truth.radius, frame.truth.angle_deg};
    for (int k = 0; k < 2; ++k) {
      cmin[static_cast<std::size_t>(k)] =
          std::min(cmin[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)]);
      cmax[static_cast<std::size_t>(k)] =
          std::max(cmax[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(k)]);
    }
  }
  if (!(power_max > 0.0)) {
    throw DataError("train_identifier: training powers are all zero");
  }
  for (int k = 0; k < 2; ++k) {
    if (!(cmax[static_cast<std::size_t>(k)] > cmin[static_cast<std::size_t>(k)])) {
      throw DataError("train_identifier: degenerate coordinate range (component " +
                      std::to_string(k) + ")");
    }
  }

  IdentifierModel model;
  model.power_norm = power_max;
  model.coord_min = cmin;
  model.coord_max = cmax;

  std::vector<int> layer_sizes;
  layer_sizes.push_back(static_cast<int>(annotated.front().power.size()));
  for (int h : hyper.hidden_sizes) layer_sizes.push_back(h);
  layer_sizes.push_back(2);
  model.net = nn::DenseNet::init(layer_sizes, derive_seed(seed, 0x696e6974 /* init */));

  nn::RegressionBatch train_set;
  for (std::size_t i = 0; i < n_train; ++i) {
    const auto& frame = annotated[order[i]];
    if (frame.power.size() != static_cast<std::size_t>(layer_sizes.front())) {
      throw DataError("train_identifier: inconsistent power vector lengths");
    }
    train_set.inputs.push_back(normalize_power(frame.power, model.power_norm));
    nn::Vec target(2);
    target(0) = (frame.truth.radius - cmin[0]) / (cmax[0] - cmin[0]);
    target(1) = (frame.truth.angle_deg - cmin[1]) / (cmax[1] - cmin[1]);
    train_set.targets.push_back(target);
  }

  nn::FitConfig fit_cfg;
  fit_cfg.epochs = hyper.epochs;
  fit_cfg.batch_size = hyper.batch_size;
  fit_cfg.optimizer.kind = nn::OptimizerKind::adamw;
  fit_cfg.optimizer.learning_rate = hyper.learning_rate;
  fit_cfg.optimizer.weight_decay = hyper.weight_decay;
  fit_cfg.seed = derive_seed(seed, 0x666974 /* fit */);
  result.epoch_losses = nn::fit(model.net, train_set, fit_cfg);

  // Test metrics: coordinate R^2 plus selection accuracy.
  std::vector<std::array<double, 2>> pred_coords, truth_coords;
  int top1_hits = 0, top1_total = 0;
  for (std::size_t i = n_train; i < order.size(); ++i) {
    const auto& frame = annotated[order[i]];
    const polar::PolarPoint p = model.predict(frame.power);
    pred_coords.push_back({p.radius, p.angle_deg});
    truth_coords.push_back({frame.truth.radius, frame.truth.angle_deg});
    if (!frame.detections.empty()) {
      const std::size_t pick = nearest_detection(p, frame.detections);
      const auto& id = frame.detections.source_ids[pick];
      ++top1_total;
      if (id && *id == frame.truth_vehicle_id) ++top1_hits;
    }
  }
  result.per_component_r2 = r2_per_component(pred_coords, truth_coords);
  double r2_sum = 0.0;
  int r2_n = 0;
  for (const auto& r2 : result.per_component_r2) {
    if (r2) {
      r2_sum += *r2;
      ++r2_n;
    }
  }
  result.test_r2 = r2_n > 0 ? std::optional<double>(r2_sum / r2_n) : std::nullopt;
  result.test_top1_evaluated = top1_total;
  result.test_top1 = top1_total > 0 ? static_cast<double>(top1_hits) / top1_total : 0.0;
  result.model = std::move(model);
  return result;
}

std::size_t nearest_detection(const polar::PolarPoint& point,
                              const polar::DetectionSet& detections) {
  if (detections.empty()) {
    throw DataError("nearest_detection: no candidates");
  }
  std::size_t best = 0;
  double best_dist = polar::embedded_distance(point, detections.points[0]);
  for (std::size_t i = 1; i < detections.size(); ++i) {
    const double d = polar::embedded_distance(point, detections.points[i]);
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

IdentifyResult identify(const IdentifierModel& model, const std::vector<double>& power,
                        const polar::DetectionSet& detections) {
  if (detections.empty()) {
    throw DataError("identify: frame has no detections");
  }
  IdentifyResult r;
  r.predicted = model.predict(power);
  r.detection_index = nearest_detection(r.predicted, detections);
  r.point = detections.points[r.detection_index];
  return r;
}

}  // namespace v2vbeam::track
