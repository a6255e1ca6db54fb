#include "v2vbeam/eval/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace v2vbeam::eval {

double top_k_accuracy(const std::vector<std::vector<int>>& ranked_predictions,
                      const std::vector<int>& labels, int k) {
  if (ranked_predictions.size() != labels.size()) {
    throw std::invalid_argument("top_k_accuracy: prediction/label count mismatch");
  }
  if (k < 1) throw std::invalid_argument("top_k_accuracy: k must be >= 1");
  if (labels.empty()) throw std::invalid_argument("top_k_accuracy: empty input");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& ranked = ranked_predictions[i];
    const auto end =
        ranked.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(ranked.size()));
    if (std::find(ranked.begin(), end, labels[i]) != end) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

R2Result r_squared(const std::vector<std::vector<double>>& predicted,
                   const std::vector<std::vector<double>>& truth) {
  if (predicted.empty() || predicted.size() != truth.size()) {
    throw std::invalid_argument("r_squared: empty or mismatched input");
  }
  const std::size_t components = truth.front().size();
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i].size() != components || predicted[i].size() != components) {
      throw std::invalid_argument("r_squared: inconsistent component counts");
    }
  }
  R2Result result;
  double sum = 0.0;
  int usable = 0;
  for (std::size_t c = 0; c < components; ++c) {
    double mean = 0.0;
    for (const auto& t : truth) mean += t[c];
    mean /= static_cast<double>(truth.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      ss_res += (truth[i][c] - predicted[i][c]) * (truth[i][c] - predicted[i][c]);
      ss_tot += (truth[i][c] - mean) * (truth[i][c] - mean);
    }
    if (ss_tot <= 0.0) {
      result.per_component.push_back(std::nullopt);
    } else {
      const double r2 = 1.0 - ss_res / ss_tot;
      result.per_component.push_back(r2);
      sum += r2;
      ++usable;
    }
  }
  if (usable > 0) result.mean = sum / usable;
  return result;
}

}  // namespace v2vbeam::eval
