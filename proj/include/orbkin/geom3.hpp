#ifndef ORBKIN_GEOM3_HPP
#define ORBKIN_GEOM3_HPP

#include <span>
#include <vector>

namespace orbkin {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const;
  Vec3 normalized() const;  // throws std::invalid_argument on zero vector
};

inline constexpr Vec3 kI{1, 0, 0};
inline constexpr Vec3 kJ{0, 1, 0};
inline constexpr Vec3 kK{0, 0, 1};

/// Rotation about an arbitrary anchor point and axis direction.  Positive
/// angles turn counterclockwise (right-hand rule) about the axis vector.
struct Rotation {
  Vec3 center;
  Vec3 axis;  // unit length after construction
  double angle_deg = 0;

  Rotation(Vec3 center, Vec3 axis, double angle_deg);
  Rotation inverse() const { return {center, axis, -angle_deg}; }
};

/// Rodrigues-formula application.
Vec3 apply(const Rotation& r, const Vec3& p);

/// Quaternion-based application; numerically independent route kept as a
/// cross-check against the matrix path.
Vec3 apply_quat(const Rotation& r, const Vec3& p);

/// Linear part only (direction vectors, no anchor translation).
Vec3 rotate_direction(const Rotation& r, const Vec3& v);

/// Apply a composition written outermost-first: the last-listed rotation acts
/// first, matching left-to-right composition notation.
Vec3 apply_sequence(std::span<const Rotation> rs, const Vec3& p);

/// The rotation T with r∘s = T∘r: same angle as s, center and axis carried
/// along by r.
Rotation conjugate(const Rotation& r, const Rotation& s);

}  // namespace orbkin

#endif
