#include "orbkin/planar.hpp"

#include <cmath>
#include <initializer_list>

#include "orbkin/angles.hpp"

namespace orbkin {

CenterEquation equation_of_center(double theta_c, const PlanarGeometry& g) {
  double tc = deg2rad(theta_c);
  double s = (g.p3p4 + g.p4p5) * std::sin(tc);
  double c = g.op3 + g.p3p4 * std::cos(tc) - g.p4p5 * std::cos(tc);
  double op5 = std::hypot(s, c);
  double e_c = -rad2deg(std::asin(s / op5));
  return {e_c, op5};
}

SecondEquation second_equation(double theta_c, double theta_p,
                               const PlanarGeometry& g) {
  auto [e_c, op5] = equation_of_center(theta_c, g);
  double a = deg2rad(theta_p - e_c);
  double s = g.p5p * std::sin(a);
  double c = op5 + g.p5p * std::cos(a);
  double op = std::hypot(s, c);
  double e = rad2deg(std::asin(s / op));
  return {e, op};
}

PlanarSolution planar_longitude(double theta_a, double theta_c, double theta_p,
                                const PlanarGeometry& g) {
  auto [e_c, op5] = equation_of_center(theta_c, g);
  auto [e, op] = second_equation(theta_c, theta_p, g);
  return {e_c, e, op5, op, wrap360(theta_a + theta_c + e_c + e)};
}

namespace {

struct P2 {
  double x, y;
};

P2 rot2(P2 center, double angle_deg, P2 p) {
  double a = deg2rad(angle_deg);
  double c = std::cos(a), s = std::sin(a);
  double dx = p.x - center.x, dy = p.y - center.y;
  return {center.x + c * dx - s * dy, center.y + s * dx + c * dy};
}

}  // namespace

PlanarOracleResult planar_oracle(double theta_a, double theta_c, double theta_p,
                                 const PlanarGeometry& g) {
  P2 o{0, 0};
  P2 p3{0, g.op3};
  P2 p4{0, g.op3 + g.p3p4};
  P2 p5{0, g.op3 + g.p3p4 - g.p4p5};
  P2 p{0, g.op3 + g.p3p4 - g.p4p5 + g.p5p};

  // applied innermost-first, as in the composition written outermost-first
  p = rot2(p5, theta_p - theta_c, p);
  p5 = rot2(p4, 2 * theta_c, p5);
  p = rot2(p4, 2 * theta_c, p);
  p5 = rot2(p3, -theta_c, p5);
  p = rot2(p3, -theta_c, p);
  for (double ang : {theta_c, theta_a}) {
    p5 = rot2(o, ang, p5);
    p = rot2(o, ang, p);
  }

  PlanarOracleResult res;
  res.x = p.x;
  res.y = p.y;
  res.longitude = wrap360(rad2deg(std::atan2(-p.x, p.y)));
  res.op = std::hypot(p.x, p.y);
  res.op5 = std::hypot(p5.x, p5.y);
  return res;
}

}  // namespace orbkin
