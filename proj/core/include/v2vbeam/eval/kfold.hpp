#pragma once

#include <cstdint>
#include <vector>

namespace v2vbeam::eval {

/// Partition of n samples into num_folds folds whose sizes differ by at
/// most one. assignment[i] is the fold id of sample i.
struct FoldPlan {
  int num_folds = 0;
  std::vector<int> assignment;
  std::uint64_t seed = 0;

  std::vector<std::size_t> fold_indices(int fold) const;
  std::vector<std::size_t> complement_indices(int fold) const;
};

/// Seeded random permutation chopped into k near-equal folds. Throws
/// std::invalid_argument for k < 2 or n < k.
FoldPlan kfold_split(std::size_t n, int k, std::uint64_t seed);

}  // namespace v2vbeam::eval
