#include "orbkin/timescale.hpp"

#include <cmath>
#include <stdexcept>

namespace orbkin {

double equation_of_time_hours(const TimescaleSample& s) {
  return (-s.lambda_m + kLambdaMAtEquinoxDeg + s.alpha) / 15.0;
}

SiderealOffsets sidereal_offsets(double alpha, double lambda_m) {
  return {alpha / 15.0, (lambda_m - kLambdaMAtEquinoxDeg) / 15.0};
}

namespace {

bool is_leap(int year, Calendar cal) {
  if (cal == Calendar::julian) return year % 4 == 0;
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month, Calendar cal) {
  static const int d[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year, cal)) return 29;
  return d[month - 1];
}

}  // namespace

double julian_day(int year, int month, int day, double day_fraction,
                  Calendar cal) {
  if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month, cal))
    throw std::invalid_argument("invalid calendar date");
  int y = year, m = month;
  if (m <= 2) {
    y -= 1;
    m += 12;
  }
  double b = 0;
  if (cal == Calendar::gregorian) {
    int a = y >= 0 ? y / 100 : -((-y + 99) / 100);
    b = 2 - a + a / 4;
  }
  return std::floor(365.25 * (y + 4716)) + std::floor(30.6001 * (m + 1)) + day +
         b - 1524.5 + day_fraction;
}

double julian_day(const CalendarDateTime& dt) {
  return julian_day(dt.year, dt.month, dt.day,
                    (dt.hour + dt.minute / 60.0) / 24.0, dt.calendar);
}

double epoch_jd() { return julian_day(1331, 12, 24, 0.5, Calendar::julian); }

CalendarDateTime epoch_gmt() {
  // 12 h 8 min mean solar time at Damascus, shifted west to Greenwich.
  double hours = 12.0 + 8.0 / 60.0 - kDamascusLongitudeDeg / 15.0;
  auto minutes = static_cast<int>(std::llround(hours * 60.0));
  return {1331, 12, 24, minutes / 60, minutes % 60, Calendar::julian};
}

double days_to_years(double days) { return days / 365.0; }
double years_to_days(double years) { return years * 365.0; }

}  // namespace orbkin
