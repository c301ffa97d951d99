#ifndef ORBKIN_ANGLES_HPP
#define ORBKIN_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace orbkin {

inline constexpr double kDegPerRad = 180.0 / std::numbers::pi;

inline double deg2rad(double d) { return d / kDegPerRad; }
inline double rad2deg(double r) { return r * kDegPerRad; }

/// Normalize to [0, 360).
inline double wrap360(double d) {
  double w = std::fmod(d, 360.0);
  if (w < 0) w += 360.0;
  return w == 360.0 ? 0.0 : w;
}

/// Normalize to (-180, 180].
inline double wrap180(double d) {
  double w = wrap360(d);
  return w > 180.0 ? w - 360.0 : w;
}

}  // namespace orbkin

#endif
