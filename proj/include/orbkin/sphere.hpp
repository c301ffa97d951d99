#ifndef ORBKIN_SPHERE_HPP
#define ORBKIN_SPHERE_HPP

#include "orbkin/planar.hpp"

namespace orbkin {

struct EclipticCoord {
  double longitude = 0;  // degrees, [0, 360)
  double latitude = 0;   // degrees, [-90, 90]
  double radius = 0;     // model lengths; 0 when not applicable
};

/// Angle from the node direction u to the planar position P':
/// theta_c + e_c + e + 90, normalized.
double theta_ell(double theta_c, double theta_p,
                 const PlanarGeometry& g = kVenusGeometry);

/// Ecliptic coordinates of the planar point carried onto the inclined orb:
/// longitude = atan2-completed arctan(cos(tilt) tan(theta_ell)) - 90 + theta_a,
/// latitude = arcsin(sin(tilt) sin(theta_ell)).  Radius left at 0.
EclipticCoord incline_coords(double theta_ell_deg, double theta_a,
                             double tilt_deg);

/// Signed longitude displacement caused by projecting from a circle inclined
/// by `inclination` onto the ecliptic: arctan(cos i tan theta) - theta, with
/// the arctangent completed by atan2 for all quadrants.  Degrees.
double displacement_equation(double theta_deg, double inclination_deg);

/// The chapter's generic correction: lunar displacement equation at the
/// elongation from the node, scaled by latitude / max_latitude.  Sign comes
/// out additive for elongations in (90,180) or (270,360) and subtractive
/// otherwise.
double displacement_correction(double elongation_deg, double latitude_deg,
                               double max_latitude_deg);

}  // namespace orbkin

#endif
