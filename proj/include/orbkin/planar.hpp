#ifndef ORBKIN_PLANAR_HPP
#define ORBKIN_PLANAR_HPP

namespace orbkin {

/// Leg lengths of the planar theory, as positive distances in the model scale
/// where OP3 = 60.  Defaults are the Venus values.
struct PlanarGeometry {
  double op3 = 60.0;
  double p3p4 = 1.0 + 41.0 / 60.0;   // 1;41
  double p4p5 = 26.0 / 60.0;         // 0;26
  double p5p = 43.0 + 33.0 / 60.0;   // 43;33
};

inline constexpr PlanarGeometry kVenusGeometry{};

struct CenterEquation {
  double e_c;   // degrees
  double op5;   // |OP5'|, model lengths
};

struct SecondEquation {
  double e;    // degrees
  double op;   // |OP'|, model lengths
};

struct PlanarSolution {
  double e_c = 0;        // equation of center, degrees
  double e = 0;          // second equation, degrees
  double op5 = 0;        // |OP5'|
  double op = 0;         // |OP'|
  double longitude = 0;  // theta_a + theta_c + e_c + e, normalized [0, 360)
};

CenterEquation equation_of_center(double theta_c,
                                  const PlanarGeometry& g = kVenusGeometry);

SecondEquation second_equation(double theta_c, double theta_p,
                               const PlanarGeometry& g = kVenusGeometry);

PlanarSolution planar_longitude(double theta_a, double theta_c, double theta_p,
                                const PlanarGeometry& g = kVenusGeometry);

/// Direct 2D composition of the five k-rotations from the initial figure.
/// Independent of the closed forms; serves as their oracle.
struct PlanarOracleResult {
  double x = 0, y = 0;   // P' in the ecliptic plane
  double longitude = 0;  // angle (j, OP'), normalized
  double op = 0;         // |OP'|
  double op5 = 0;        // |OP5'|
};

PlanarOracleResult planar_oracle(double theta_a, double theta_c, double theta_p,
                                 const PlanarGeometry& g = kVenusGeometry);

}  // namespace orbkin

#endif
