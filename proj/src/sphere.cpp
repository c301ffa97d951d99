#include "orbkin/sphere.hpp"

#include <cmath>

#include "orbkin/angles.hpp"

namespace orbkin {

double theta_ell(double theta_c, double theta_p, const PlanarGeometry& g) {
  auto [e_c, op5] = equation_of_center(theta_c, g);
  double e = second_equation(theta_c, theta_p, g).e;
  return wrap360(theta_c + e_c + e + 90.0);
}

namespace {

/// atan2 completion of arctan(cos i * tan theta): same quadrant as theta,
/// continuous at the 90° boundaries.
double inclined_arctan(double theta_deg, double inclination_deg) {
  double t = deg2rad(theta_deg);
  double ci = std::cos(deg2rad(inclination_deg));
  return rad2deg(std::atan2(ci * std::sin(t), std::cos(t)));
}

}  // namespace

EclipticCoord incline_coords(double theta_ell_deg, double theta_a,
                             double tilt_deg) {
  double tl = deg2rad(theta_ell_deg);
  EclipticCoord c;
  c.longitude = wrap360(inclined_arctan(theta_ell_deg, tilt_deg) - 90.0 + theta_a);
  c.latitude = rad2deg(std::asin(std::sin(deg2rad(tilt_deg)) * std::sin(tl)));
  return c;
}

double displacement_equation(double theta_deg, double inclination_deg) {
  return wrap180(inclined_arctan(theta_deg, inclination_deg) - theta_deg);
}

double displacement_correction(double elongation_deg, double latitude_deg,
                               double max_latitude_deg) {
  // The lunar table lookup of the Remarque, replaced by the analytic
  // displacement equation at the Moon's 5° inclination.  The sign of the
  // displacement equation already follows the quadrant rule: additive in
  // (90,180) and (270,360), subtractive otherwise.
  return displacement_equation(elongation_deg, 5.0) * latitude_deg /
         max_latitude_deg;
}

}  // namespace orbkin
