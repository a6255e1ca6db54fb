#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "v2vbeam/nn/adam.hpp"
#include "v2vbeam/nn/dense.hpp"
#include "v2vbeam/nn/lstm.hpp"
#include "v2vbeam/nn/loss.hpp"

namespace v2vbeam::nn {

struct RegressionBatch {
  std::vector<Vec> inputs;
  std::vector<Vec> targets;
};

struct ClassificationBatch {
  std::vector<Vec> inputs;
  std::vector<int> labels;
};

struct SequenceBatch {
  std::vector<std::vector<Vec>> sequences;  // equal lengths within a batch
  std::vector<int> labels;
};

struct DenseGradients {
  std::vector<Mat> weights;
  std::vector<Vec> biases;
};

struct LstmGradients {
  std::vector<LstmLayer> layers;  // same shapes as the net's layers
  DenseGradients head;
};

/// Named views over model parameters; order is stable and matches the
/// corresponding gradient views.
std::vector<ParamView> param_views(DenseNet& net);
std::vector<ParamView> param_views(LstmNet& net);
std::vector<ConstParamView> grad_views(const DenseGradients& g);
std::vector<ConstParamView> grad_views(const LstmGradients& g, const LstmNet& net);

/// Batched head logits, one column per sequence.
Mat forward_logits_batch(const LstmNet& net, const SequenceBatch& batch,
                         bool training = false, std::uint64_t dropout_seed = 0);

/// Mean batch loss, forward only.
double batch_loss(const DenseNet& net, const RegressionBatch& batch);
double batch_loss(const DenseNet& net, const ClassificationBatch& batch);
double batch_loss(const LstmNet& net, const SequenceBatch& batch, bool training = false,
                  std::uint64_t dropout_seed = 0);

/// Mean batch loss plus analytic gradients of it (backpropagation; BPTT for
/// the LSTM). The LSTM applies dropout masks drawn from dropout_seed when
/// inter_layer_dropout > 0; the same seed reproduces the same stochastic loss.
std::pair<double, DenseGradients> compute_gradients(const DenseNet& net,
                                                    const RegressionBatch& batch);
std::pair<double, DenseGradients> compute_gradients(const DenseNet& net,
                                                    const ClassificationBatch& batch);
std::pair<double, LstmGradients> compute_gradients(const LstmNet& net,
                                                   const SequenceBatch& batch,
                                                   std::uint64_t dropout_seed);

/// Gradient step on the mean batch loss; returns the pre-update loss.
/// Throws TrainingDivergence on non-finite loss or gradients, identifying
/// the offending parameter block.
double backward_and_step(DenseNet& net, const RegressionBatch& batch, AdamOptimizer& opt);
double backward_and_step(DenseNet& net, const ClassificationBatch& batch, AdamOptimizer& opt);
double backward_and_step(LstmNet& net, const SequenceBatch& batch, AdamOptimizer& opt,
                         std::uint64_t dropout_seed);

struct FitConfig {
  int epochs = 1;
  int batch_size = 32;
  OptimizerConfig optimizer;
  std::uint64_t seed = 0;  // drives epoch shuffling and dropout
};

/// Minibatch training with per-epoch seeded shuffling. Returns the mean
/// pre-update loss per epoch.
std::vector<double> fit(DenseNet& net, const RegressionBatch& dataset, const FitConfig& cfg);
std::vector<double> fit(LstmNet& net, const SequenceBatch& dataset, const FitConfig& cfg);

}  // namespace v2vbeam::nn
