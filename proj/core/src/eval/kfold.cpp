#include "v2vbeam/eval/kfold.hpp"

#include <numeric>
#include <stdexcept>

#include "v2vbeam/rng.hpp"

namespace v2vbeam::eval {

std::vector<std::size_t> FoldPlan::fold_indices(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldPlan::complement_indices(int fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != fold) out.push_back(i);
  }
  return out;
}

FoldPlan kfold_split(std::size_t n, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("kfold_split: k must be >= 2");
  if (n < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("kfold_split: need at least k samples");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(order);

  FoldPlan plan;
  plan.num_folds = k;
  plan.seed = seed;
  plan.assignment.assign(n, 0);
  // First n % k folds get one extra sample.
  const std::size_t base = n / static_cast<std::size_t>(k);
  const std::size_t extra = n % static_cast<std::size_t>(k);
  std::size_t pos = 0;
  for (int fold = 0; fold < k; ++fold) {
    const std::size_t size = base + (static_cast<std::size_t>(fold) < extra ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) {
      plan.assignment[order[pos++]] = fold;
    }
  }
  return plan;
}

}  // namespace v2vbeam::eval
