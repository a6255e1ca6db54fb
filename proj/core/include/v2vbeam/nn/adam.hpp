#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace v2vbeam::nn {

enum class OptimizerKind { adam, adamw };

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::adam;
  double learning_rate = 1e-3;
  double weight_decay = 0.0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Mutable view of one named parameter block (contiguous storage).
struct ParamView {
  std::string name;
  double* data = nullptr;
  Eigen::Index size = 0;
};

struct ConstParamView {
  std::string name;
  const double* data = nullptr;
  Eigen::Index size = 0;
};

/// Adam / AdamW over a fixed list of parameter blocks. Adam folds weight
/// decay into the gradient (L2); AdamW applies the decay decoupled from the
/// moment estimates. With weight_decay = 0 the two are identical.
class AdamOptimizer {
 public:
  explicit AdamOptimizer(const OptimizerConfig& config) : config_(config) {}

  const OptimizerConfig& config() const { return config_; }
  long step_count() const { return step_; }

  /// Applies one update in place. Moment shapes are locked to the first
  /// call; mismatched block shapes afterwards throw std::invalid_argument.
  /// Throws TrainingDivergence when a parameter goes non-finite.
  void step(const std::vector<ParamView>& params,
            const std::vector<ConstParamView>& grads);

 private:
  OptimizerConfig config_;
  long step_ = 0;
  std::vector<Eigen::VectorXd> first_moment_;
  std::vector<Eigen::VectorXd> second_moment_;
};

}  // namespace v2vbeam::nn
