#include "orbkin/geom3.hpp"

#include <cmath>
#include <stdexcept>

#include "orbkin/angles.hpp"

namespace orbkin {

double Vec3::norm() const { return std::sqrt(dot(*this)); }

Vec3 Vec3::normalized() const {
  double n = norm();
  if (n == 0.0) throw std::invalid_argument("zero vector has no direction");
  return {x / n, y / n, z / n};
}

Rotation::Rotation(Vec3 center, Vec3 axis, double angle_deg)
    : center(center), axis(axis.normalized()), angle_deg(angle_deg) {}

Vec3 apply(const Rotation& r, const Vec3& p) {
  double a = deg2rad(r.angle_deg);
  double c = std::cos(a), s = std::sin(a);
  Vec3 d = p - r.center;
  // Rodrigues: d cosθ + (axis×d) sinθ + axis (axis·d)(1−cosθ)
  Vec3 rotated = d * c + r.axis.cross(d) * s + r.axis * (r.axis.dot(d) * (1 - c));
  return r.center + rotated;
}

Vec3 apply_quat(const Rotation& r, const Vec3& p) {
  double half = deg2rad(r.angle_deg) / 2;
  double w = std::cos(half);
  Vec3 q = r.axis * std::sin(half);
  Vec3 d = p - r.center;
  // v' = v + 2 q × (q × v + w v)
  Vec3 t = q.cross(d) + d * w;
  Vec3 rotated = d + q.cross(t) * 2.0;
  return r.center + rotated;
}

Vec3 rotate_direction(const Rotation& r, const Vec3& v) {
  double a = deg2rad(r.angle_deg);
  double c = std::cos(a), s = std::sin(a);
  return v * c + r.axis.cross(v) * s + r.axis * (r.axis.dot(v) * (1 - c));
}

Vec3 apply_sequence(std::span<const Rotation> rs, const Vec3& p) {
  Vec3 q = p;
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) q = apply(*it, q);
  return q;
}

Rotation conjugate(const Rotation& r, const Rotation& s) {
  return Rotation(apply(r, s.center), rotate_direction(r, s.axis), s.angle_deg);
}

}  // namespace orbkin
