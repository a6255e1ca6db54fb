#pragma once

#include <cmath>
#include <numbers>

namespace v2vbeam {

inline constexpr double kPi = std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wrap an angle in degrees into [0, 360).
inline double wrap_deg(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  if (w >= 360.0) w = 0.0;  // fmod can land exactly on 360 after the add
  return w;
}

/// Wrap an angle in degrees into [-180, 180).
inline double wrap_deg_signed(double deg) {
  double w = wrap_deg(deg + 180.0) - 180.0;
  return w;
}

/// Wrap an angle in radians into (-pi, pi].
inline double wrap_rad_signed(double rad) {
  double w = std::fmod(rad, 2.0 * kPi);
  if (w > kPi) w -= 2.0 * kPi;
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

/// Absolute circular separation of two angles in degrees, in [0, 180].
inline double circular_diff_deg(double a, double b) {
  return std::abs(wrap_deg_signed(a - b));
}

}  // namespace v2vbeam
