#ifndef ORBKIN_KINEMATICS_HPP
#define ORBKIN_KINEMATICS_HPP

#include <optional>
#include <vector>

#include "orbkin/geom3.hpp"
#include "orbkin/model.hpp"

namespace orbkin {

/// The full composition rewritten with every k-axis rotation moved to the
/// right: residual small-tilt rotations M (axes in the inclined-orb plane),
/// the incline rotation about u, and the in-plane k-rotations.  Application
/// order is planar first, then incline, then M.
struct SplitMotion {
  std::vector<Rotation> m_rotations;        // outermost-first
  std::optional<Rotation> incline_rotation;
  std::vector<Rotation> planar_rotations;   // outermost-first
};

/// Concrete rotations of the model for the given parameter values,
/// outermost-first.
std::vector<Rotation> instantiate(const OrbModel& m, const ParamSet& ps);

Vec3 position_at(const OrbModel& m, const ParamSet& ps);
Vec3 position3d(const OrbModel& m, double t_years);

SplitMotion split_at(const OrbModel& m, const ParamSet& ps);
SplitMotion split(const OrbModel& m, double t_years);

Vec3 apply_split(const SplitMotion& sm, const Vec3& p);

/// Ecliptic longitude of a 3D point, measured from j counterclockwise (the
/// sense in which increasing theta_a increases longitude), in [0, 360).
double ecliptic_longitude(const Vec3& p);

/// arcsin(z / |p|), degrees.
double ecliptic_latitude(const Vec3& p);

/// Longitude error made by neglecting M: full 3D longitude minus the
/// incline-plus-planar longitude, at the given (theta_c, theta_p).
/// Independent of theta_a.
double delta_lambda(const OrbModel& m, double theta_c, double theta_p);

}  // namespace orbkin

#endif
