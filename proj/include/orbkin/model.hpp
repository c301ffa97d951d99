#ifndef ORBKIN_MODEL_HPP
#define ORBKIN_MODEL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbkin/geom3.hpp"

namespace orbkin {

struct ModelParseError : std::runtime_error {
  ModelParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line(line) {}
  int line;
};

enum class Param { theta_a, theta_c, theta_p };

const char* param_name(Param p);

/// Linear motion law: value at time t (Persian years) is phase + rate*t,
/// normalized to [0, 360).
struct MotionLaw {
  double phase_deg = 0;
  double rate_deg_per_year = 0;

  double at(double t_years) const;

  bool operator==(const MotionLaw&) const = default;
};

struct ParamSet {
  double theta_a = 0, theta_c = 0, theta_p = 0;

  double get(Param p) const;
};

/// Angle expression attached to a rotation spec: a sum of small-integer
/// multiples of parameters plus an optional constant.  Covers every form in
/// the Venus models: theta_a, theta_c, -theta_c, 2*theta_c, theta_p - theta_c
/// and fixed tilt angles.
struct AngleExpr {
  struct Term {
    int coef = 1;  // restricted to {-1, 1, 2}
    Param param = Param::theta_a;
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms;
  double constant_deg = 0;

  bool is_constant() const { return terms.empty(); }
  double eval(const ParamSet& ps) const;

  static AngleExpr constant(double deg) { return {{}, deg}; }
  static AngleExpr param(Param p, int coef = 1) { return {{{coef, p}}, 0}; }

  bool operator==(const AngleExpr&) const = default;
};

enum class AxisTag { i, j, k };

Vec3 axis_vector(AxisTag tag);

struct RotationSpec {
  std::string anchor;
  AxisTag axis = AxisTag::k;
  AngleExpr angle;

  bool operator==(const RotationSpec&) const = default;
};

/// A nested-orb system: anchor points along the apsidal line (offsets from O
/// in the j direction, model lengths), rotation specs listed outermost-first,
/// and the motion laws of the three parameters.
struct OrbModel {
  std::string name;
  std::vector<std::pair<std::string, double>> anchors;  // (name, j-offset)
  std::vector<RotationSpec> rotations;
  std::map<std::string, MotionLaw> laws;  // keyed by parameter name

  double anchor_offset(const std::string& name) const;  // throws if unknown
  Vec3 anchor_point(const std::string& name) const;

  bool operator==(const OrbModel&) const = default;
};

ParamSet params_at(const OrbModel& m, double t_years);

/// Parse the line-oriented model format (see the shipped venus_1.orb).
OrbModel load_model(const std::string& text);

std::string save_model(const OrbModel& m);

/// Ibn al-Shatir's first Venus model (10 rotations, Almagest-style tilts).
const OrbModel& builtin_venus_1();

/// Second variant ("Planetary Hypotheses" amendment): rotator half-tilt
/// 3;30 on P4-j, no epicycle j-tilt.
const OrbModel& builtin_venus_2();

/// Copy with every i/j tilt angle forced to zero; k-rotations untouched.
OrbModel zero_tilts(OrbModel m);

}  // namespace orbkin

#endif
