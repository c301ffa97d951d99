#ifndef ORBKIN_TIMESCALE_HPP
#define ORBKIN_TIMESCALE_HPP

#include <string>

namespace orbkin {

/// Mean solar longitude at the reference spring equinox, -2°1'7".
inline constexpr double kLambdaMAtEquinoxDeg = -(2.0 + 1.0 / 60.0 + 7.0 / 3600.0);

/// Geographic longitude of Damascus, 36°18'23" east.
inline constexpr double kDamascusLongitudeDeg = 36.0 + 18.0 / 60.0 + 23.0 / 3600.0;

/// Solar samples feeding the timescale formulas; no solar theory is built in,
/// callers supply (mean longitude, right ascension) from any source.
struct TimescaleSample {
  double lambda_m = 0;  // degrees
  double alpha = 0;     // degrees
};

/// Equation of time in hours, French sign convention, vanishing at the spring
/// equinox: E = (-lambda_m - 2°1'7" + alpha) / 15.
double equation_of_time_hours(const TimescaleSample& s);

struct SiderealOffsets {
  double civil_gap_hours;  // (T - T0) - (tau - tau0) = alpha / 15
  double mean_gap_hours;   // (T - T0) - (t - t0) = (lambda_m - lambda_m(t0)) / 15
};

SiderealOffsets sidereal_offsets(double alpha, double lambda_m);

enum class Calendar { julian, gregorian };

struct CalendarDateTime {
  int year = 0;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  Calendar calendar = Calendar::julian;
};

/// Astronomical Julian Day.  `day_fraction` in days from midnight (0.5 = noon).
/// Throws std::invalid_argument on an invalid date.
double julian_day(int year, int month, int day, double day_fraction,
                  Calendar cal);

double julian_day(const CalendarDateTime& dt);

/// JD of the epoch: noon 24 December 1331, Julian calendar.
double epoch_jd();

/// The epoch expressed in GMT: 12 h 8 min minus the Damascus longitude in
/// hours, i.e. 09:43 on 1331-12-24 (Julian calendar).
CalendarDateTime epoch_gmt();

/// Persian years of exactly 365 mean solar days.
double days_to_years(double days);
double years_to_days(double years);

}  // namespace orbkin

#endif
