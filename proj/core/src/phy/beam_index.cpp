#include "v2vbeam/phy/beam_index.hpp"

#include <cmath>

#include "v2vbeam/angles.hpp"

namespace v2vbeam::phy {

Panel panel_from_name(const std::string& name) {
  if (name == "front") return Panel::front;
  if (name == "right") return Panel::right;
  if (name == "back") return Panel::back;
  if (name == "left") return Panel::left;
  throw std::invalid_argument("unknown panel name: " + name);
}

Panel panel_for_angle_deg(double angle_deg) {
  // Sector for panel p is [boresight - 45, boresight + 45).
  const double shifted = wrap_deg(angle_deg + 45.0);
  const int idx = static_cast<int>(shifted / 90.0) % kNumPanels;
  return static_cast<Panel>(idx);
}

GlobalBeamIndex GlobalBeamIndex::from_flat(int flat, int beams_per_panel) {
  if (beams_per_panel < 1 || flat < 0 || flat >= kNumPanels * beams_per_panel) {
    throw std::invalid_argument("flat beam index out of range: " + std::to_string(flat));
  }
  GlobalBeamIndex b;
  b.panel = static_cast<Panel>(flat / beams_per_panel);
  b.local_index = flat % beams_per_panel;
  b.flat_index = flat;
  return b;
}

GlobalBeamIndex GlobalBeamIndex::from_panel_local(Panel p, int local, int beams_per_panel) {
  if (local < 0 || local >= beams_per_panel) {
    throw std::invalid_argument("local beam index out of range: " + std::to_string(local));
  }
  GlobalBeamIndex b;
  b.panel = p;
  b.local_index = local;
  b.flat_index = static_cast<int>(p) * beams_per_panel + local;
  return b;
}

}  // namespace v2vbeam::phy
