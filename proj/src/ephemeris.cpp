#include "orbkin/ephemeris.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "orbkin/angles.hpp"
#include "orbkin/kinematics.hpp"
#include "orbkin/planar.hpp"
#include "orbkin/sphere.hpp"
#include "orbkin/tables.hpp"
#include "orbkin/timescale.hpp"

namespace orbkin {

const char* method_name(Method m) {
  switch (m) {
    case Method::full3d: return "full3d";
    case Method::planar_exact: return "planar_exact";
    case Method::planar_interp: return "planar_interp";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "full3d") return Method::full3d;
  if (name == "planar_exact") return Method::planar_exact;
  if (name == "planar_interp") return Method::planar_interp;
  throw std::invalid_argument("unknown method: " + name);
}

PlanarGeometry planar_geometry(const OrbModel& m) {
  PlanarGeometry g;
  g.op3 = m.anchor_offset("P3");
  g.p3p4 = std::abs(m.anchor_offset("P4") - m.anchor_offset("P3"));
  g.p4p5 = std::abs(m.anchor_offset("P5") - m.anchor_offset("P4"));
  g.p5p = std::abs(m.anchor_offset("P") - m.anchor_offset("P5"));
  return g;
}

namespace {

/// Constant angle of the outermost non-k rotation: the incline tilt for the
/// planar (neglect-M) routes.  Zero when the model has no tilts.
double incline_tilt(const OrbModel& m, const ParamSet& ps) {
  for (const auto& r : m.rotations)
    if (r.axis != AxisTag::k) return r.angle.eval(ps);
  return 0.0;
}

}  // namespace

EphemerisRecord compute_record(const OrbModel& m, double t_years, Method method) {
  EphemerisRecord rec;
  rec.jd = epoch_jd() + years_to_days(t_years);
  rec.t_years = t_years;
  rec.method = method;

  ParamSet ps = params_at(m, t_years);
  if (method == Method::full3d) {
    Vec3 p = position_at(m, ps);
    rec.longitude = ecliptic_longitude(p);
    rec.latitude = ecliptic_latitude(p);
    rec.radius = p.norm();
    return rec;
  }

  PlanarGeometry g = planar_geometry(m);
  auto [e_c, op5] = equation_of_center(ps.theta_c, g);
  double e, op;
  if (method == Method::planar_interp) {
    e = interp_e(ps.theta_c, ps.theta_p, g);
    // radius from the exact second equation; interpolation only replaces e
    op = second_equation(ps.theta_c, ps.theta_p, g).op;
  } else {
    auto se = second_equation(ps.theta_c, ps.theta_p, g);
    e = se.e;
    op = se.op;
  }
  double tl = wrap360(ps.theta_c + e_c + e + 90.0);
  EclipticCoord c = incline_coords(tl, ps.theta_a, incline_tilt(m, ps));
  rec.longitude = c.longitude;
  rec.latitude = c.latitude;
  rec.radius = op;
  return rec;
}

void write_ephemeris_header(std::ostream& out) {
  out.precision(15);
  out << "jd,t_years,method,longitude_deg,latitude_deg,radius\n";
}

void write_ephemeris_row(std::ostream& out, const EphemerisRecord& r) {
  out.precision(15);
  out << r.jd << ',' << r.t_years << ',' << method_name(r.method) << ','
      << r.longitude << ',' << r.latitude << ',' << r.radius << '\n';
}

std::vector<ReferenceRecord> read_reference_csv(std::istream& in) {
  std::vector<ReferenceRecord> out;
  std::string line;
  bool first = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.find("jd") != std::string::npos) continue;  // header
    }
    std::istringstream row(line);
    ReferenceRecord r;
    char c1, c2;
    if (!(row >> r.jd >> c1 >> r.longitude >> c2 >> r.latitude) || c1 != ',' ||
        c2 != ',')
      throw std::runtime_error("reference CSV: malformed row at line " +
                               std::to_string(lineno));
    if (!out.empty() && r.jd <= out.back().jd)
      throw std::runtime_error("reference CSV: jd not strictly increasing at line " +
                               std::to_string(lineno));
    out.push_back(r);
  }
  if (out.empty()) throw std::runtime_error("reference CSV: no data rows");
  return out;
}

CompareStats compare_reference(const OrbModel& m,
                               const std::vector<ReferenceRecord>& ref,
                               Method method, std::ostream* rows_out) {
  if (rows_out) rows_out->precision(15);
  if (rows_out)
    *rows_out << "jd,longitude_deg,latitude_deg,ref_longitude_deg,"
                 "ref_latitude_deg,dlon_arcmin,dlat_arcmin\n";
  CompareStats st;
  double sum_lon = 0, sum_lat = 0, sq_lon = 0, sq_lat = 0;
  for (const auto& r : ref) {
    double t = days_to_years(r.jd - epoch_jd());
    EphemerisRecord rec = compute_record(m, t, method);
    double dlon = wrap180(rec.longitude - r.longitude) * 60.0;
    double dlat = (rec.latitude - r.latitude) * 60.0;
    if (rows_out)
      *rows_out << r.jd << ',' << rec.longitude << ',' << rec.latitude << ','
                << r.longitude << ',' << r.latitude << ',' << dlon << ','
                << dlat << '\n';
    st.max_dlon_arcmin = std::max(st.max_dlon_arcmin, std::abs(dlon));
    st.max_dlat_arcmin = std::max(st.max_dlat_arcmin, std::abs(dlat));
    sum_lon += std::abs(dlon);
    sum_lat += std::abs(dlat);
    sq_lon += dlon * dlon;
    sq_lat += dlat * dlat;
    ++st.rows;
  }
  st.mean_dlon_arcmin = sum_lon / st.rows;
  st.mean_dlat_arcmin = sum_lat / st.rows;
  st.rms_dlon_arcmin = std::sqrt(sq_lon / st.rows);
  st.rms_dlat_arcmin = std::sqrt(sq_lat / st.rows);
  return st;
}

}  // namespace orbkin
