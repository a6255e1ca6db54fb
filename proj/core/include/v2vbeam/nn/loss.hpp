#pragma once

#include "v2vbeam/nn/dense.hpp"

namespace v2vbeam::nn {

/// Mean of squared componentwise differences. Throws on length mismatch.
double loss_mse(const Vec& prediction, const Vec& target);

/// Numerically stabilized softmax (max subtraction); sums to 1.
Vec softmax(const Vec& logits);

/// Negative log-likelihood of `label` under softmax(logits), stabilized.
/// Throws std::invalid_argument when the label is out of range.
double loss_cross_entropy(const Vec& logits, int label);

}  // namespace v2vbeam::nn
