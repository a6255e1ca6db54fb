#include "v2vbeam/eval/beam_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace v2vbeam::eval {

BeamRing::BeamRing(const phy::Codebook& codebook) {
  const int total = codebook.total_beams();
  flat_of_rank_.resize(static_cast<std::size_t>(total));
  std::iota(flat_of_rank_.begin(), flat_of_rank_.end(), 0);
  std::stable_sort(flat_of_rank_.begin(), flat_of_rank_.end(), [&](int a, int b) {
    const double aa = codebook.merged_angle_deg(a);
    const double ab = codebook.merged_angle_deg(b);
    if (aa != ab) return aa < ab;
    return a < b;
  });
  rank_of_flat_.resize(static_cast<std::size_t>(total));
  for (int r = 0; r < total; ++r) {
    rank_of_flat_[static_cast<std::size_t>(flat_of_rank_[static_cast<std::size_t>(r)])] = r;
  }
}

int BeamRing::circular_distance(int flat_a, int flat_b) const {
  const int n = size();
  const int d = std::abs(rank(flat_a) - rank(flat_b));
  return std::min(d, n - d);
}

std::vector<int> BeamRing::nearest(int flat_index, int count) const {
  const int n = size();
  if (count < 1 || count > n) {
    throw std::invalid_argument("BeamRing::nearest: bad count");
  }
  const int r = rank(flat_index);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count));
  out.push_back(flat_index);
  for (int step = 1; static_cast<int>(out.size()) < count; ++step) {
    out.push_back(flat_of_rank_[static_cast<std::size_t>(((r + step) % n + n) % n)]);
    if (static_cast<int>(out.size()) < count) {
      out.push_back(flat_of_rank_[static_cast<std::size_t>(((r - step) % n + n) % n)]);
    }
  }
  return out;
}

}  // namespace v2vbeam::eval
