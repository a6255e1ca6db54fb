#include "v2vbeam/nn/adam.hpp"

#include <cmath>
#include <stdexcept>

#include "v2vbeam/errors.hpp"

namespace v2vbeam::nn {

void AdamOptimizer::step(const std::vector<ParamView>& params,
                         const std::vector<ConstParamView>& grads) {
  if (params.size() != grads.size()) {
    throw std::invalid_argument("optimizer: parameter/gradient block count mismatch");
  }
  if (first_moment_.empty()) {
    first_moment_.reserve(params.size());
    second_moment_.reserve(params.size());
    for (const auto& p : params) {
      first_moment_.push_back(Eigen::VectorXd::Zero(p.size));
      second_moment_.push_back(Eigen::VectorXd::Zero(p.size));
    }
  }
  if (first_moment_.size() != params.size()) {
    throw std::invalid_argument("optimizer: block count changed between steps");
  }

  ++step_;
  const double b1 = config_.beta1;
  const double b2 = config_.beta2;
  const double bias1 = 1.0 - std::pow(b1, static_cast<double>(step_));
  const double bias2 = 1.0 - std::pow(b2, static_cast<double>(step_));
  const double lr = config_.learning_rate;
  const double wd = config_.weight_decay;

  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = params[i];
    const auto& g = grads[i];
    if (p.size != g.size || p.size != first_moment_[i].size()) {
      throw std::invalid_argument("optimizer: shape mismatch in block " + p.name);
    }
    Eigen::Map<Eigen::ArrayXd> theta(p.data, p.size);
    Eigen::Map<const Eigen::ArrayXd> grad(g.data, g.size);
    auto m = first_moment_[i].array();
    auto v = second_moment_[i].array();

    if (config_.kind == OptimizerKind::adam && wd != 0.0) {
      // Classic L2: decay folded into the gradient, so it passes through the
      // moment estimates.
      Eigen::ArrayXd geff = grad + wd * theta;
      m = b1 * m + (1.0 - b1) * geff;
      v = b2 * v + (1.0 - b2) * geff.square();
    } else {
      m = b1 * m + (1.0 - b1) * grad;
      v = b2 * v + (1.0 - b2) * grad.square();
    }

    Eigen::ArrayXd update = lr * (m / bias1) / ((v / bias2).sqrt() + config_.epsilon);
    if (config_.kind == OptimizerKind::adamw && wd != 0.0) {
      update += lr * wd * theta;  // decoupled decay on the pre-update value
    }
    theta -= update;
    if (!theta.isFinite().all()) {
      throw TrainingDivergence(p.name, "non-finite parameter after update");
    }
  }
}

}  // namespace v2vbeam::nn
