#include <doctest.h>

#include <cmath>

#include "orbkin/angles.hpp"
#include "orbkin/kinematics.hpp"
#include "orbkin/model.hpp"
#include "orbkin/planar.hpp"
#include "orbkin/sexa.hpp"
#include "orbkin/sphere.hpp"

using namespace orbkin;

namespace {

const double kThetaA0 = to_degrees(parse_sex("77;52,10"));
const double kThetaC0 = to_degrees(parse_sex("280;9,0")) - kThetaA0;
const double kThetaP0 = to_degrees(parse_sex("320;50,19"));
const double kIncline = 10.0 / 60.0;

}  // namespace

TEST_CASE("theta_ell") {
  CHECK(theta_ell(0, 0) == 90.0);
  CHECK(theta_ell(180, 180) == doctest::Approx(270.0).epsilon(1e-12));
  CHECK(theta_ell(kThetaC0, kThetaP0) ==
        doctest::Approx(276.1983158556).epsilon(1e-9));
}

TEST_CASE("incline_coords") {
  EclipticCoord top = incline_coords(90, 30.0, kIncline);
  CHECK(top.latitude == doctest::Approx(kIncline).epsilon(1e-12));
  CHECK(top.longitude == doctest::Approx(30.0).epsilon(1e-12));

  // zero tilt reduces to a pure angle shift
  EclipticCoord flat = incline_coords(123.0, 45.0, 0.0);
  CHECK(flat.latitude == 0.0);
  CHECK(flat.longitude == doctest::Approx(123.0 - 90.0 + 45.0).epsilon(1e-12));

  // epoch configuration: latitude about -9.94 arcmin, longitude within
  // 0.01 degree of the planar longitude
  double tl = theta_ell(kThetaC0, kThetaP0);
  EclipticCoord c = incline_coords(tl, kThetaA0, kIncline);
  CHECK(c.latitude * 60 == doctest::Approx(-9.9415412172).epsilon(1e-8));
  CHECK(std::abs(c.longitude - 264.06776) < 0.01);
}

TEST_CASE("incline longitude shift equals the displacement equation") {
  for (double tl = 0; tl < 360; tl += 3.5)
    for (double tilt : {kIncline, 2.0, 5.0}) {
      EclipticCoord c = incline_coords(tl, 77.0, tilt);
      double shift = wrap180(c.longitude - (tl - 90.0 + 77.0));
      CHECK(std::abs(shift - displacement_equation(tl, tilt)) < 1e-12);
    }
}

TEST_CASE("incline latitude odd symmetry") {
  for (double tl = 0; tl <= 360; tl += 2.5) {
    double a = incline_coords(tl, 0, kIncline).latitude;
    double b = incline_coords(360.0 - tl, 0, kIncline).latitude;
    CHECK(std::abs(a + b) < 1e-12);
  }
}

TEST_CASE("3D latitude with only the incline tilt active") {
  OrbModel m = zero_tilts(builtin_venus_1());
  // restore just the 0;10 incline on P2-i
  for (auto& r : m.rotations)
    if (r.anchor == "P2" && r.axis == AxisTag::i)
      r.angle = AngleExpr::constant(kIncline);

  for (double tc = 0; tc < 360; tc += 5)
    for (double tp = 0; tp < 360; tp += 5) {
      ParamSet ps{kThetaA0, tc, tp};
      double lat3d = ecliptic_latitude(position_at(m, ps));
      double tl = theta_ell(tc, tp);
      double expected =
          rad2deg(std::asin(std::sin(deg2rad(kIncline)) * std::sin(deg2rad(tl))));
      CHECK(std::abs(lat3d - expected) < 1e-9);
    }
}

TEST_CASE("displacement_equation") {
  CHECK(displacement_equation(0, 5) == 0.0);
  CHECK(std::abs(displacement_equation(180, 5)) < 1e-12);

  // maximum for i = 5 degrees: about 6'33", against the chapter's 6'40"
  double max_disp = 0;
  for (double th = 0; th < 180; th += 0.001)
    max_disp = std::max(max_disp, std::abs(displacement_equation(th, 5)));
  double six_forty = (6.0 + 40.0 / 60.0) / 60.0;
  CHECK(std::abs(max_disp - six_forty) * 3600 < 10.0);  // within 10 arcsec
  // analytic max (1-cos i)/(1+cos i) in radians
  double analytic = rad2deg((1 - std::cos(deg2rad(5.0))) / (1 + std::cos(deg2rad(5.0))));
  CHECK(max_disp == doctest::Approx(analytic).epsilon(1e-6));

  // at the incline's 10 arcmin, displacement stays below the analytic
  // bound tan^2(i/2) = 0.437 arcsec
  double incline_bound =
      rad2deg(std::pow(std::tan(deg2rad(kIncline / 2)), 2)) * 3600 + 1e-9;
  for (double th = 0; th < 360; th += 0.25)
    CHECK(std::abs(displacement_equation(th, kIncline)) * 3600 <=
          incline_bound);
}

TEST_CASE("displacement_correction") {
  CHECK(displacement_correction(0, 3, 5) == 0.0);
  CHECK(std::abs(displacement_correction(90, 5, 5)) < 1e-12);
  CHECK(std::abs(displacement_correction(180, 5, 5)) < 1e-12);

  // maximal in the octants; subtractive below 90 degrees
  double oct = displacement_correction(45, 5, 5);
  CHECK(oct < 0);
  CHECK(std::abs(oct) * 60 == doctest::Approx(6.55).epsilon(0.01));

  // additive in (90, 180)
  CHECK(displacement_correction(135, 5, 5) > 0);
  // subtractive again in (180, 270), additive in (270, 360)
  CHECK(displacement_correction(225, 5, 5) < 0);
  CHECK(displacement_correction(315, 5, 5) > 0);

  // scales with latitude over max latitude
  CHECK(displacement_correction(45, 2.5, 5) ==
        doctest::Approx(oct / 2).epsilon(1e-12));
}
