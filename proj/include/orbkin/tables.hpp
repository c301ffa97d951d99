#ifndef ORBKIN_TABLES_HPP
#define ORBKIN_TABLES_HPP

#include <iosfwd>
#include <vector>

#include "orbkin/planar.hpp"

namespace orbkin {

/// max over theta_p of |e(theta_c, .)| = arcsin(P5P / OP5'), degrees.
double max_abs_e(double theta_c, const PlanarGeometry& g = kVenusGeometry);

/// Ptolemaic interpolation coefficient; 0 at theta_c = 0, 1 at 180.
double chi(double theta_c, const PlanarGeometry& g = kVenusGeometry);

/// e(0,theta_p) + chi(theta_c) * (e(180,theta_p) - e(0,theta_p)), degrees.
double interp_e(double theta_c, double theta_p,
                const PlanarGeometry& g = kVenusGeometry);

struct ZijRow {
  double theta;  // grid node, degrees
  double e_c;
  double chi;
  double e0;  // e(0, theta)
  double de;  // e(180, theta) - e(0, theta)
};

/// Rows at 0, step, ..., 360 - step.  step must divide 360.
std::vector<ZijRow> generate_zij(double step,
                                 const PlanarGeometry& g = kVenusGeometry);

/// CSV with decimal columns plus sexagesimal companions (2 fraction places):
/// theta,e_c,chi,e0,de,theta_sex,e_c_sex,e0_sex,de_sex
void write_zij_csv(std::ostream& out, const std::vector<ZijRow>& rows);

}  // namespace orbkin

#endif
