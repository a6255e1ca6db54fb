#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace v2vbeam::nn {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Fully connected net with ReLU hidden activations and an identity output
/// layer. weights[i] has shape layer_sizes[i+1] x layer_sizes[i].
struct DenseNet {
  std::vector<int> layer_sizes;
  std::vector<Mat> weights;
  std::vector<Vec> biases;

  /// Glorot-uniform weights (+-sqrt(6/(fan_in+fan_out))), zero biases.
  static DenseNet init(const std::vector<int>& sizes, std::uint64_t seed);

  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  std::size_t num_layers() const { return weights.size(); }

  /// Throws std::invalid_argument when the input length does not match.
  Vec forward(const Vec& input) const;

  /// Column-per-sample batched forward.
  Mat forward_batch(const Mat& inputs) const;
};

}  // namespace v2vbeam::nn
