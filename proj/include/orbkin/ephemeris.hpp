#ifndef ORBKIN_EPHEMERIS_HPP
#define ORBKIN_EPHEMERIS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "orbkin/model.hpp"
#include "orbkin/planar.hpp"

namespace orbkin {

enum class Method { full3d, planar_exact, planar_interp };

const char* method_name(Method m);
Method parse_method(const std::string& name);  // throws on unknown method

struct EphemerisRecord {
  double jd = 0;
  double t_years = 0;
  Method method = Method::full3d;
  double longitude = 0;  // degrees, [0, 360)
  double latitude = 0;   // degrees
  double radius = 0;     // model lengths
};

/// One position of the model at t (Persian years from the epoch), computed by
/// the chosen route: the full 3D composition, or the planar closed forms plus
/// the incline for latitude (exact or Ptolemaic-interpolated second equation).
EphemerisRecord compute_record(const OrbModel& m, double t_years, Method method);

/// Leg lengths read off the model's anchors, for the planar routes.
PlanarGeometry planar_geometry(const OrbModel& m);

void write_ephemeris_header(std::ostream& out);
void write_ephemeris_row(std::ostream& out, const EphemerisRecord& r);

struct ReferenceRecord {
  double jd = 0;
  double longitude = 0;
  double latitude = 0;
};

/// Parse `jd,longitude_deg,latitude_deg` CSV (with header).  Throws
/// std::runtime_error on malformed rows, unsorted jd, or an empty file.
std::vector<ReferenceRecord> read_reference_csv(std::istream& in);

struct CompareStats {
  std::size_t rows = 0;
  double max_dlon_arcmin = 0;
  double mean_dlon_arcmin = 0;
  double rms_dlon_arcmin = 0;
  double max_dlat_arcmin = 0;
  double mean_dlat_arcmin = 0;
  double rms_dlat_arcmin = 0;
};

/// Compute at each reference jd and report per-row deltas (arcminutes) plus
/// summary stats.  Per-row CSV is written to `rows_out` if non-null.
CompareStats compare_reference(const OrbModel& m,
                               const std::vector<ReferenceRecord>& ref,
                               Method method, std::ostream* rows_out);

}  // namespace orbkin

#endif
