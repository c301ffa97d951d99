#include "orbkin/tables.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "orbkin/angles.hpp"
#include "orbkin/sexa.hpp"

namespace orbkin {

double max_abs_e(double theta_c, const PlanarGeometry& g) {
  double op5 = equation_of_center(theta_c, g).op5;
  return rad2deg(std::asin(g.p5p / op5));
}

double chi(double theta_c, const PlanarGeometry& g) {
  double lo = max_abs_e(0, g);
  double hi = max_abs_e(180, g);
  return (max_abs_e(theta_c, g) - lo) / (hi - lo);
}

double interp_e(double theta_c, double theta_p, const PlanarGeometry& g) {
  double e0 = second_equation(0, theta_p, g).e;
  double e180 = second_equation(180, theta_p, g).e;
  return e0 + chi(theta_c, g) * (e180 - e0);
}

std::vector<ZijRow> generate_zij(double step, const PlanarGeometry& g) {
  if (step <= 0 || std::abs(360.0 / step - std::round(360.0 / step)) > 1e-9)
    throw std::invalid_argument("step must divide 360");
  auto n = static_cast<std::size_t>(std::llround(360.0 / step));
  std::vector<ZijRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double theta = i * step;
    double e0 = second_equation(0, theta, g).e;
    double e180 = second_equation(180, theta, g).e;
    rows.push_back({theta, equation_of_center(theta, g).e_c, chi(theta, g), e0,
                    e180 - e0});
  }
  return rows;
}

void write_zij_csv(std::ostream& out, const std::vector<ZijRow>& rows) {
  out << "theta,e_c,chi,e0,de,theta_sex,e_c_sex,e0_sex,de_sex\n";
  for (const auto& r : rows) {
    out << r.theta << ',' << r.e_c << ',' << r.chi << ',' << r.e0 << ','
        << r.de << ',' << format_sex(r.theta, 2) << ',' << format_sex(r.e_c, 2)
        << ',' << format_sex(r.e0, 2) << ',' << format_sex(r.de, 2) << '\n';
  }
}

}  // namespace orbkin
