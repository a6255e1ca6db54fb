#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace v2vbeam::phy {

/// The four receiver panels. Flat beam indexing follows this order, and the
/// panel boresights sweep the merged plane in the same order:
/// front = 0 deg, right = 90 deg, back = 180 deg, left = 270 deg.
enum class Panel : int { front = 0, right = 1, back = 2, left = 3 };

inline constexpr int kNumPanels = 4;

inline constexpr std::array<Panel, kNumPanels> all_panels() {
  return {Panel::front, Panel::right, Panel::back, Panel::left};
}

inline double panel_boresight_deg(Panel p) {
  return 90.0 * static_cast<int>(p);
}

inline const char* panel_name(Panel p) {
  switch (p) {
    case Panel::front: return "front";
    case Panel::right: return "right";
    case Panel::back: return "back";
    case Panel::left: return "left";
  }
  return "?";
}

Panel panel_from_name(const std::string& name);

/// Panel whose 90-degree sector contains the merged-plane angle (degrees).
Panel panel_for_angle_deg(double angle_deg);

/// One beam out of the 4Q codebook. flat = panel_index * Q + local.
struct GlobalBeamIndex {
  Panel panel = Panel::front;
  int local_index = 0;
  int flat_index = 0;

  static GlobalBeamIndex from_flat(int flat, int beams_per_panel);
  static GlobalBeamIndex from_panel_local(Panel p, int local, int beams_per_panel);

  bool operator==(const GlobalBeamIndex&) const = default;
};

}  // namespace v2vbeam::phy
