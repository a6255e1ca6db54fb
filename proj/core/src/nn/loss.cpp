#include "v2vbeam/nn/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace v2vbeam::nn {

double loss_mse(const Vec& prediction, const Vec& target) {
  if (prediction.size() != target.size()) {
    throw std::invalid_argument("mse: length mismatch");
  }
  if (prediction.size() == 0) {
    throw std::invalid_argument("mse: empty vectors");
  }
  return (prediction - target).squaredNorm() / static_cast<double>(prediction.size());
}

Vec softmax(const Vec& logits) {
  const double m = logits.maxCoeff();
  Vec e = (logits.array() - m).exp();
  return e / e.sum();
}

double loss_cross_entropy(const Vec& logits, int label) {
  if (label < 0 || label >= logits.size()) {
    throw std::invalid_argument("cross_entropy: label out of range");
  }
  const double m = logits.maxCoeff();
  const double log_sum = std::log((logits.array() - m).exp().sum());
  return log_sum - (logits(label) - m);
}

}  // namespace v2vbeam::nn
