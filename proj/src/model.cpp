#include "orbkin/model.hpp"

#include <algorithm>
#include <sstream>

#include "orbkin/angles.hpp"
#include "orbkin/sexa.hpp"

namespace orbkin {

const char* param_name(Param p) {
  switch (p) {
    case Param::theta_a: return "theta_a";
    case Param::theta_c: return "theta_c";
    case Param::theta_p: return "theta_p";
  }
  return "?";
}

double MotionLaw::at(double t_years) const {
  return wrap360(phase_deg + rate_deg_per_year * t_years);
}

double ParamSet::get(Param p) const {
  switch (p) {
    case Param::theta_a: return theta_a;
    case Param::theta_c: return theta_c;
    case Param::theta_p: return theta_p;
  }
  return 0;
}

double AngleExpr::eval(const ParamSet& ps) const {
  double v = constant_deg;
  for (const Term& t : terms) v += t.coef * ps.get(t.param);
  return v;
}

Vec3 axis_vector(AxisTag tag) {
  switch (tag) {
    case AxisTag::i: return kI;
    case AxisTag::j: return kJ;
    case AxisTag::k: return kK;
  }
  return kK;
}

double OrbModel::anchor_offset(const std::string& n) const {
  for (const auto& [name, off] : anchors)
    if (name == n) return off;
  throw std::invalid_argument("unknown anchor: " + n);
}

Vec3 OrbModel::anchor_point(const std::string& n) const {
  return {0, anchor_offset(n), 0};
}

ParamSet params_at(const OrbModel& m, double t_years) {
  auto law = [&](const char* name) -> const MotionLaw& {
    auto it = m.laws.find(name);
    if (it == m.laws.end())
      throw std::invalid_argument(std::string("model has no law for ") + name);
    return it->second;
  };
  return {law("theta_a").at(t_years), law("theta_c").at(t_years),
          law("theta_p").at(t_years)};
}

namespace {

std::optional<Param> param_from_name(const std::string& s) {
  if (s == "theta_a") return Param::theta_a;
  if (s == "theta_c") return Param::theta_c;
  if (s == "theta_p") return Param::theta_p;
  return std::nullopt;
}

double parse_sex_or_throw(const std::string& tok, int line) {
  try {
    return to_degrees(parse_sex(tok));
  } catch (const SexParseError& e) {
    throw ModelParseError("bad sexagesimal literal '" + tok + "': " + e.what(),
                          line);
  }
}

/// Parse `theta_a`, `-theta_c`, `2*theta_c`, `theta_p - theta_c`, `0;10`, ...
AngleExpr parse_angle_expr(const std::string& text, int line) {
  AngleExpr expr;
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  bool first = true;
  skip_ws();
  while (pos < text.size()) {
    int sign = +1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : +1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ModelParseError("expected '+' or '-' in angle expression", line);
    }
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '+' &&
           text[pos] != '-')
      ++pos;
    std::string atom = text.substr(start, pos - start);
    if (atom.empty())
      throw ModelParseError("empty term in angle expression", line);

    if (atom.find("theta") != std::string::npos) {
      int coef = 1;
      std::string pname = atom;
      if (auto star = atom.find('*'); star != std::string::npos) {
        try {
          coef = std::stoi(atom.substr(0, star));
        } catch (...) {
          throw ModelParseError("bad coefficient in '" + atom + "'", line);
        }
        pname = atom.substr(star + 1);
      }
      coef *= sign;
      if (coef != -1 && coef != 1 && coef != 2)
        throw ModelParseError("unsupported coefficient in '" + atom + "'", line);
      auto p = param_from_name(pname);
      if (!p)
        throw ModelParseError("unknown parameter '" + pname + "'", line);
      expr.terms.push_back({coef, *p});
    } else {
      expr.constant_deg += sign * parse_sex_or_throw(atom, line);
    }
    first = false;
    skip_ws();
  }
  if (expr.terms.empty() && first)
    throw ModelParseError("missing angle expression", line);
  return expr;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> toks;
  std::istringstream in(s);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

OrbModel load_model(const std::string& text) {
  OrbModel m;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool have_name = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    auto toks = split_tokens(raw);
    if (toks.empty()) continue;

    const std::string& kw = toks[0];
    if (kw == "model") {
      if (toks.size() != 2)
        throw ModelParseError("expected: model NAME", lineno);
      m.name = toks[1];
      have_name = true;
    } else if (kw == "param") {
      // param NAME = RATE /year + PHASE
      if (toks.size() != 7 || toks[2] != "=" || toks[4] != "/year" ||
          toks[5] != "+")
        throw ModelParseError("expected: param NAME = RATE /year + PHASE",
                              lineno);
      if (!param_from_name(toks[1]))
        throw ModelParseError("unknown parameter '" + toks[1] + "'", lineno);
      MotionLaw law{parse_sex_or_throw(toks[6], lineno),
                    parse_sex_or_throw(toks[3], lineno)};
      m.laws[toks[1]] = law;
    } else if (kw == "point") {
      if (toks.size() != 3)
        throw ModelParseError("expected: point NAME OFFSET", lineno);
      m.anchors.emplace_back(toks[1], parse_sex_or_throw(toks[2], lineno));
    } else if (kw == "rot") {
      if (toks.size() < 4)
        throw ModelParseError("expected: rot ANCHOR AXIS EXPR", lineno);
      RotationSpec spec;
      spec.anchor = toks[1];
      bool known = std::any_of(m.anchors.begin(), m.anchors.end(),
                               [&](const auto& a) { return a.first == spec.anchor; });
      if (!known)
        throw ModelParseError("rotation on undeclared anchor '" + spec.anchor +
                                  "'",
                              lineno);
      if (toks[2] == "i")
        spec.axis = AxisTag::i;
      else if (toks[2] == "j")
        spec.axis = AxisTag::j;
      else if (toks[2] == "k")
        spec.axis = AxisTag::k;
      else
        throw ModelParseError("axis must be i, j or k", lineno);
      std::string expr_text;
      for (std::size_t i = 3; i < toks.size(); ++i) {
        if (i > 3) expr_text += ' ';
        expr_text += toks[i];
      }
      spec.angle = parse_angle_expr(expr_text, lineno);
      m.rotations.push_back(std::move(spec));
    } else {
      throw ModelParseError("unknown directive '" + kw + "'", lineno);
    }
  }
  if (!have_name) throw ModelParseError("missing 'model NAME' line", 1);
  return m;
}

namespace {

std::string format_expr(const AngleExpr& e) {
  std::string s;
  for (const auto& t : e.terms) {
    int coef = t.coef;
    if (!s.empty()) {
      s += coef < 0 ? " - " : " + ";
      coef = std::abs(coef);
    } else if (coef < 0) {
      s += "-";
      coef = -coef;
    }
    if (coef != 1) s += std::to_string(coef) + "*";
    s += param_name(t.param);
  }
  if (e.terms.empty() || e.constant_deg != 0) {
    std::string c = format_sex(e.constant_deg, 4);
    if (s.empty())
      s = c;
    else if (c[0] == '-')
      s += " - " + c.substr(1);
    else
      s += " + " + c;
  }
  return s;
}

}  // namespace

std::string save_model(const OrbModel& m) {
  std::ostringstream out;
  out << "model " << m.name << "\n";
  for (const char* p : {"theta_a", "theta_c", "theta_p"}) {
    auto it = m.laws.find(p);
    if (it == m.laws.end()) continue;
    out << "param " << p << " = " << format_sex(it->second.rate_deg_per_year, 4)
        << " /year + " << format_sex(it->second.phase_deg, 4) << "\n";
  }
  for (const auto& [name, off] : m.anchors)
    out << "point " << name << " " << format_sex(off, 4) << "\n";
  for (const auto& r : m.rotations) {
    const char* axis = r.axis == AxisTag::i ? "i" : r.axis == AxisTag::j ? "j" : "k";
    out << "rot " << r.anchor << " " << axis << " " << format_expr(r.angle)
        << "\n";
  }
  return out.str();
}

namespace {

constexpr const char* kVenus1Text = R"(# Ibn al-Shatir's first Venus model (Almagest-style tilts)
model venus_1
param theta_a = 0;1 /year + 77;52,10
param theta_c = 359;44,40 /year + 202;16,50
param theta_p = 225;1,48,41 /year + 320;50,19
point P1 0;0
point P2 0;0
point P3 60;0
point P4 61;41
point P5 61;15
point P  104;48
rot P1 k theta_a
rot P2 i 0;10
rot P2 k theta_c
rot P3 k -theta_c
rot P4 i -0;5
rot P4 j 3;0
rot P4 k 2*theta_c
rot P5 i 0;5
rot P5 j 0;30
rot P5 k theta_p - theta_c
)";

constexpr const char* kVenus2Text = R"(# Second Venus variant (Planetary Hypotheses amendment):
# rotator half-tilt 3;30 on P4-j, no epicycle j-tilt.
model venus_2
param theta_a = 0;1 /year + 77;52,10
param theta_c = 359;44,40 /year + 202;16,50
param theta_p = 225;1,48,41 /year + 320;50,19
point P1 0;0
point P2 0;0
point P3 60;0
point P4 61;41
point P5 61;15
point P  104;48
rot P1 k theta_a
rot P2 i 0;10
rot P2 k theta_c
rot P3 k -theta_c
rot P4 i -0;5
rot P4 j 3;30
rot P4 k 2*theta_c
rot P5 i 0;5
rot P5 k theta_p - theta_c
)";

}  // namespace

const OrbModel& builtin_venus_1() {
  static const OrbModel m = load_model(kVenus1Text);
  return m;
}

const OrbModel& builtin_venus_2() {
  static const OrbModel m = load_model(kVenus2Text);
  return m;
}

OrbModel zero_tilts(OrbModel m) {
  for (auto& r : m.rotations)
    if (r.axis != AxisTag::k) r.angle = AngleExpr::constant(0);
  return m;
}

}  // namespace orbkin
