#include "v2vbeam/eval/sequences.hpp"

#include <cmath>
#include <stdexcept>

namespace v2vbeam::eval {

std::vector<SequenceSample> build_sequences(const std::vector<sim::Frame>& frames,
                                            int window, double sample_rate_hz,
                                            const std::string& scenario_id,
                                            std::vector<std::string>* warnings) {
  if (window < 1) throw std::invalid_argument("build_sequences: window must be >= 1");
  std::vector<SequenceSample> out;
  if (frames.size() < static_cast<std::size_t>(window) + 1) {
    if (warnings) {
      warnings->push_back(scenario_id + ": fewer than " + std::to_string(window + 1) +
                          " frames, no sequences built");
    }
    return out;
  }
  const double dt = 1.0 / sample_rate_hz;
  int skipped_gap = 0, skipped_power = 0;
  for (std::size_t start = 0; start + static_cast<std::size_t>(window) < frames.size();
       ++start) {
    bool uniform = true;
    for (std::size_t i = start; i < start + static_cast<std::size_t>(window); ++i) {
      if (std::abs((frames[i + 1].timestamp - frames[i].timestamp) - dt) > 1e-6) {
        uniform = false;
        break;
      }
    }
    if (!uniform) {
      ++skipped_gap;
      continue;
    }
    if (!frames[start].power) {
      ++skipped_power;
      continue;
    }
    SequenceSample s;
    s.frames.reserve(static_cast<std::size_t>(window));
    for (int i = 0; i < window; ++i) {
      s.frames.push_back(&frames[start + static_cast<std::size_t>(i)]);
    }
    s.first_power = *frames[start].power;
    s.label_flat = frames[start + static_cast<std::size_t>(window)].truth.beam.flat_index;
    s.scenario_id = scenario_id;
    s.start_index = static_cast<int>(start);
    out.push_back(std::move(s));
  }
  if (warnings && skipped_gap > 0) {
    warnings->push_back(scenario_id + ": skipped " + std::to_string(skipped_gap) +
                        " windows across timestamp gaps");
  }
  if (warnings && skipped_power > 0) {
    warnings->push_back(scenario_id + ": skipped " + std::to_string(skipped_power) +
                        " windows without a first power vector");
  }
  return out;
}

}  // namespace v2vbeam::eval
