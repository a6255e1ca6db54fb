#pragma once

#include <optional>
#include <vector>

namespace v2vbeam::eval {

/// Fraction of samples whose label appears among the first k entries of the
/// ranked prediction list. Throws on length mismatch or k < 1.
double top_k_accuracy(const std::vector<std::vector<int>>& ranked_predictions,
                      const std::vector<int>& labels, int k);

struct R2Result {
  std::optional<double> mean;  // average over components with variance
  std::vector<std::optional<double>> per_component;  // nullopt when truth is constant
};

/// 1 - SS_res/SS_tot per output component, averaged over the components for
/// which the truth varies. Throws on empty or mismatched input.
R2Result r_squared(const std::vector<std::vector<double>>& predicted,
                   const std::vector<std::vector<double>>& truth);

}  // namespace v2vbeam::eval
