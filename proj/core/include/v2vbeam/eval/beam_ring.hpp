#pragma once

#include <vector>

#include "v2vbeam/phy/codebook.hpp"

namespace v2vbeam::eval {

/// The 4Q beams reordered by merged steering angle (ties by flat index) into
/// a ring, so that "beam difference" is meaningful across panel boundaries.
class BeamRing {
 public:
  explicit BeamRing(const phy::Codebook& codebook);

  int size() const { return static_cast<int>(rank_of_flat_.size()); }
  int rank(int flat_index) const { return rank_of_flat_.at(static_cast<std::size_t>(flat_index)); }

  /// Circular distance between two flat indices on the angle ring.
  int circular_distance(int flat_a, int flat_b) const;

  /// The `count` beams ring-nearest to `flat_index` (the beam itself first).
  std::vector<int> nearest(int flat_index, int count) const;

 private:
  std::vector<int> rank_of_flat_;
  std::vector<int> flat_of_rank_;
};

}  // namespace v2vbeam::eval
