#include "v2vbeam/nn/dense.hpp"

#include <cmath>
#include <stdexcept>

#include "v2vbeam/rng.hpp"

namespace v2vbeam::nn {

DenseNet DenseNet::init(const std::vector<int>& sizes, std::uint64_t seed) {
  if (sizes.size() < 2) {
    throw std::invalid_argument("dense: need at least input and output sizes");
  }
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("dense: layer sizes must be positive");
  }
  DenseNet net;
  net.layer_sizes = sizes;
  Rng rng(seed);
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    const int fan_in = sizes[i];
    const int fan_out = sizes[i + 1];
    const double bound = std::sqrt(6.0 / (fan_in + fan_out));
    Mat w(fan_out, fan_in);
    for (int r = 0; r < fan_out; ++r) {
      for (int c = 0; c < fan_in; ++c) {
        w(r, c) = rng.uniform(-bound, bound);
      }
    }
    net.weights.push_back(std::move(w));
    net.biases.push_back(Vec::Zero(fan_out));
  }
  return net;
}

Vec DenseNet::forward(const Vec& input) const {
  if (input.size() != input_size()) {
    throw std::invalid_argument("dense forward: input length " +
                                std::to_string(input.size()) + " != " +
                                std::to_string(input_size()));
  }
  Vec a = input;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Vec z = weights[i] * a + biases[i];
    a = (i + 1 < weights.size()) ? z.cwiseMax(0.0) : std::move(z);
  }
  return a;
}

Mat DenseNet::forward_batch(const Mat& inputs) const {
  if (inputs.rows() != input_size()) {
    throw std::invalid_argument("dense forward: batch row count mismatch");
  }
  Mat a = inputs;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Mat z = (weights[i] * a).colwise() + biases[i];
    a = (i + 1 < weights.size()) ? z.cwiseMax(0.0) : std::move(z);
  }
  return a;
}

}  // namespace v2vbeam::nn
