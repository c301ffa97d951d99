#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbkin/angles.hpp"
#include "orbkin/ephemeris.hpp"
#include "orbkin/kinematics.hpp"
#include "orbkin/model.hpp"
#include "orbkin/planar.hpp"
#include "orbkin/sexa.hpp"
#include "orbkin/sphere.hpp"
#include "orbkin/tables.hpp"
#include "orbkin/timescale.hpp"

namespace {

using namespace orbkin;

OrbModel resolve_model(const std::string& spec) {
  if (spec == "venus_1") return builtin_venus_1();
  if (spec == "venus_2") return builtin_venus_2();
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open model file: " + spec);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_model(buf.str());
}

Calendar parse_calendar(const std::string& s) {
  if (s == "julian") return Calendar::julian;
  if (s == "gregorian") return Calendar::gregorian;
  throw std::runtime_error("calendar must be julian or gregorian");
}

/// ISO-8601 date, optional THH:MM.
double date_to_t_years(const std::string& iso, Calendar cal) {
  int y, mo, d, h = 12, mi = 0;
  char dash1, dash2;
  std::istringstream in(iso);
  if (!(in >> y >> dash1 >> mo >> dash2 >> d) || dash1 != '-' || dash2 != '-')
    throw std::runtime_error("bad date: " + iso);
  char sep;
  if (in >> sep) {
    char colon;
    if (sep != 'T' || !(in >> h >> colon >> mi) || colon != ':')
      throw std::runtime_error("bad date: " + iso);
  }
  double jd = julian_day(y, mo, d, (h + mi / 60.0) / 24.0, cal);
  return days_to_years(jd - epoch_jd());
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void print_record(std::ostream& out, const EphemerisRecord& r,
                  const std::string& format) {
  if (format == "json") {
    nlohmann::json j{{"jd", r.jd},
                     {"t_years", r.t_years},
                     {"method", method_name(r.method)},
                     {"longitude_deg", r.longitude},
                     {"latitude_deg", r.latitude},
                     {"radius", r.radius}};
    out << j.dump(2) << "\n";
  } else {
    write_ephemeris_header(out);
    write_ephemeris_row(out, r);
  }
}

void write_grid_csv(std::ostream& out, double step,
                    const std::function<double(double, double)>& f) {
  out.precision(12);
  out << "theta_c,theta_p,value\n";
  for (double tc = 0; tc < 360; tc += step)
    for (double tp = 0; tp < 360; tp += step)
      out << tc << ',' << tp << ',' << f(tc, tp) << '\n';
}

int run_compute(const std::string& model_spec, std::optional<double> t_opt,
                const std::string& date, const std::string& calendar,
                const std::string& method_name_, const std::string& out_path,
                const std::string& format) {
  OrbModel m = resolve_model(model_spec);
  double t = t_opt ? *t_opt : date_to_t_years(date, parse_calendar(calendar));
  Method method = parse_method(method_name_);
  EphemerisRecord rec = compute_record(m, t, method);

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  print_record(out, rec, format);

  if (t == 0.0) {
    std::cout << "epoch check (t=0, noon 24 Dec 1331 Julian = "
              << "09:43 GMT):\n"
              << "  computed (" << method_name(method)
              << "): " << format_sex(rec.longitude, 1) << " = " << rec.longitude
              << " deg\n"
              << "  Ibn al-Shatir's value:  264;23 = 264.3833 deg\n"
              << "  IMCCE reference:        264;21 = 264.3500 deg\n"
              << "  note: the historical computation chain behind the ~19'\n"
              << "  offset from the displayed formulas is not recoverable;\n"
              << "  see README.\n";
  }
  return 0;
}

int run_series(const std::string& model_spec, double t0, double span,
               double step_days, bool grid, double grid_step,
               const std::string& method_name_, const std::string& out_path) {
  OrbModel m = resolve_model(model_spec);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  if (grid) {
    write_grid_csv(out, grid_step, [&](double tc, double tp) {
      return ecliptic_latitude(position_at(m, {0.0, tc, tp}));
    });
    return 0;
  }
  Method method = parse_method(method_name_);
  write_ephemeris_header(out);
  auto n = static_cast<long long>(std::floor(span * 365.0 / step_days));
  for (long long i = 0; i <= n; ++i) {
    double t = t0 + days_to_years(i * step_days);
    write_ephemeris_row(out, compute_record(m, t, method));
  }
  return 0;
}

int run_tables(const std::string& model_spec, double step, bool error_surface,
               bool dlambda, const std::string& out_path) {
  OrbModel m = resolve_model(model_spec);
  PlanarGeometry g = planar_geometry(m);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  if (error_surface) {
    write_grid_csv(out, step, [&](double tc, double tp) {
      return interp_e(tc, tp, g) - second_equation(tc, tp, g).e;
    });
  } else if (dlambda) {
    write_grid_csv(out, step,
                   [&](double tc, double tp) { return delta_lambda(m, tc, tp); });
  } else {
    write_zij_csv(out, generate_zij(step, g));
  }
  return 0;
}

int run_compare(const std::string& model_spec, const std::string& ref_path,
                const std::string& method_name_, const std::string& out_path) {
  OrbModel m = resolve_model(model_spec);
  std::ifstream ref_in(ref_path);
  if (!ref_in) throw std::runtime_error("cannot open reference file: " + ref_path);
  auto ref = read_reference_csv(ref_in);

  double ten_years = years_to_days(10.0);
  for (const auto& r : ref)
    if (std::abs(r.jd - epoch_jd()) > ten_years) {
      std::cerr << "warning: reference jd " << r.jd
                << " is more than 10 years from the epoch\n";
      break;
    }

  Method method = parse_method(method_name_);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  CompareStats st = compare_reference(m, ref, method, &out);
  std::cerr << "rows: " << st.rows << "\n"
            << "dlon arcmin  max " << st.max_dlon_arcmin << "  mean "
            << st.mean_dlon_arcmin << "  rms " << st.rms_dlon_arcmin << "\n"
            << "dlat arcmin  max " << st.max_dlat_arcmin << "  mean "
            << st.mean_dlat_arcmin << "  rms " << st.rms_dlat_arcmin << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ibn al-Shatir Venus model ephemeris"};
  app.require_subcommand(1);

  std::string model_spec = "venus_1";
  std::string method = "full3d";
  std::string out_path;
  std::string format = "csv";
  std::string date, calendar = "julian";
  std::optional<double> t_opt;

  auto* compute = app.add_subcommand("compute", "position at one instant");
  compute->add_option("--model", model_spec, "model file or venus_1 / venus_2");
  compute->add_option("--t", t_opt, "Persian years from the epoch");
  compute->add_option("--date", date, "ISO date, e.g. 1331-12-24T12:00");
  compute->add_option("--calendar", calendar, "julian | gregorian");
  compute->add_option("--method", method,
                      "full3d | planar_exact | planar_interp");
  compute->add_option("--out", out_path, "output file (default stdout)");
  compute->add_option("--format", format, "csv | json");

  double t0 = 0, span = 5, step_days = 1, grid_step = 5;
  bool grid = false;
  auto* series = app.add_subcommand("series", "multi-year ephemeris series");
  series->add_option("--model", model_spec);
  series->add_option("--t0", t0, "start, Persian years");
  series->add_option("--span", span, "span in Persian years");
  series->add_option("--step", step_days, "step in mean solar days");
  series->add_flag("--grid", grid, "(theta_c,theta_p) latitude grid instead");
  series->add_option("--grid-step", grid_step, "grid step in degrees");
  series->add_option("--method", method);
  series->add_option("--out", out_path);

  double table_step = 1;
  bool error_surface = false, dlambda = false;
  auto* tables = app.add_subcommand("tables", "zij table and figure grids");
  tables->add_option("--model", model_spec);
  tables->add_option("--step", table_step, "grid step in degrees");
  tables->add_flag("--error-surface", error_surface,
                   "interpolation error grid instead of the zij");
  tables->add_flag("--delta-lambda", dlambda,
                   "longitude error of neglecting M instead of the zij");
  tables->add_option("--out", out_path);

  std::string ref_path;
  auto* compare = app.add_subcommand("compare", "compare against reference CSV");
  compare->add_option("--model", model_spec);
  compare->add_option("--ref", ref_path, "reference CSV: jd,longitude_deg,latitude_deg")
      ->required();
  compare->add_option("--method", method);
  compare->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      if (!t_opt && date.empty()) {
        std::cerr << "compute: need --t or --date\n";
        return 1;
      }
      return run_compute(model_spec, t_opt, date, calendar, method, out_path,
                         format);
    }
    if (series->parsed())
      return run_series(model_spec, t0, span, step_days, grid, grid_step,
                        method, out_path);
    if (tables->parsed())
      return run_tables(model_spec, table_step, error_surface, dlambda,
                        out_path);
    if (compare->parsed())
      return run_compare(model_spec, ref_path, method, out_path);
  } catch (const ModelParseError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
