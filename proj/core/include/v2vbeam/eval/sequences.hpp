#pragma once

#include <string>
#include <vector>

#include "v2vbeam/sim/types.hpp"

namespace v2vbeam::eval {

/// Sliding-window sample: r consecutive frames, the power vector of the
/// first frame, and the optimal beam of the frame right after the window.
/// Frames are referenced, not copied; the owning frame store must outlive
/// the sequences.
struct SequenceSample {
  std::vector<const sim::Frame*> frames;
  std::vector<double> first_power;
  int label_flat = 0;
  std::string scenario_id;
  int start_index = 0;
};

/// Windows at every start index with r frames plus a successor. Windows
/// spanning a timestamp gap (dropped frames) or missing the first power
/// vector are skipped with a warning. Fewer than r+1 frames yields an empty
/// result with a warning.
std::vector<SequenceSample> build_sequences(const std::vector<sim::Frame>& frames,
                                            int window, double sample_rate_hz,
                                            const std::string& scenario_id,
                                            std::vector<std::string>* warnings = nullptr);

}  // namespace v2vbeam::eval
