#include "orbkin/kinematics.hpp"

#include <cmath>

#include "orbkin/angles.hpp"
#include "orbkin/planar.hpp"
#include "orbkin/sphere.hpp"

namespace orbkin {

std::vector<Rotation> instantiate(const OrbModel& m, const ParamSet& ps) {
  std::vector<Rotation> out;
  out.reserve(m.rotations.size());
  for (const auto& spec : m.rotations)
    out.emplace_back(m.anchor_point(spec.anchor), axis_vector(spec.axis),
                     spec.angle.eval(ps));
  return out;
}

Vec3 position_at(const OrbModel& m, const ParamSet& ps) {
  auto rs = instantiate(m, ps);
  return apply_sequence(rs, m.anchor_point("P"));
}

Vec3 position3d(const OrbModel& m, double t_years) {
  return position_at(m, params_at(m, t_years));
}

SplitMotion split_at(const OrbModel& m, const ParamSet& ps) {
  auto rs = instantiate(m, ps);
  std::vector<bool> is_k;
  is_k.reserve(rs.size());
  for (const auto& spec : m.rotations) is_k.push_back(spec.axis == AxisTag::k);

  // Bubble every k-rotation rightward past the tilts: K∘A = (K A K⁻¹)∘K.
  // The k-rotations themselves are never altered.
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < rs.size(); ++i) {
      if (is_k[i] && !is_k[i + 1]) {
        Rotation t = conjugate(rs[i], rs[i + 1]);
        rs[i + 1] = rs[i];
        rs[i] = t;
        std::swap(is_k[i], is_k[i + 1]);
        moved = true;
      }
    }
  }

  std::size_t n_tilts = 0;
  while (n_tilts < rs.size() && !is_k[n_tilts]) ++n_tilts;

  SplitMotion sm;
  sm.planar_rotations.assign(rs.begin() + n_tilts, rs.end());
  if (n_tilts == 0) return sm;

  // The outermost tilt is the incline rotation about u; move it to the inside
  // of the tilt group so the remaining tilts form M: T1∘Ti = (T1 Ti T1⁻¹)∘T1.
  Rotation incline = rs[0];
  for (std::size_t i = 1; i < n_tilts; ++i)
    sm.m_rotations.push_back(conjugate(incline, rs[i]));
  sm.incline_rotation = incline;
  return sm;
}

SplitMotion split(const OrbModel& m, double t_years) {
  return split_at(m, params_at(m, t_years));
}

Vec3 apply_split(const SplitMotion& sm, const Vec3& p) {
  Vec3 q = apply_sequence(sm.planar_rotations, p);
  if (sm.incline_rotation) q = apply(*sm.incline_rotation, q);
  return apply_sequence(sm.m_rotations, q);
}

double ecliptic_longitude(const Vec3& p) {
  return wrap360(rad2deg(std::atan2(-p.x, p.y)));
}

double ecliptic_latitude(const Vec3& p) {
  return rad2deg(std::asin(p.z / p.norm()));
}

double delta_lambda(const OrbModel& m, double theta_c, double theta_p) {
  ParamSet ps{0.0, wrap360(theta_c), wrap360(theta_p)};
  SplitMotion sm = split_at(m, ps);
  Vec3 approx = apply_sequence(sm.planar_rotations, m.anchor_point("P"));
  if (sm.incline_rotation) approx = apply(*sm.incline_rotation, approx);
  double full = ecliptic_longitude(position_at(m, ps));
  return wrap180(full - ecliptic_longitude(approx));
}

}  // namespace orbkin
