#ifndef ORBKIN_SEXA_HPP
#define ORBKIN_SEXA_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orbkin {

/// Error raised by parse_sex; `position` is the character offset of the
/// offending input.
struct SexParseError : std::runtime_error {
  SexParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position(position) {}
  std::size_t position;
};

/// A signed sexagesimal number such as "359;45,40".  The semicolon separates
/// the integer part from the base-60 fraction digits.  Exact at parse time;
/// all downstream math happens in decimal degrees (doubles).
struct SexNum {
  int sign = +1;  // +1 or -1; zero is normalized to +1
  long long integer_part = 0;
  std::vector<int> fraction_digits;  // each in 0..59

  double value() const;

  bool operator==(const SexNum&) const = default;
};

/// Parse a literal matching `[-]?INT(;INT(,INT)*)?`.  Fraction digits must be
/// below 60; violations report the position of the offending digit.
SexNum parse_sex(std::string_view text);

/// Positional expansion as decimal degrees.
double to_degrees(const SexNum& x);

/// Format a decimal value with `places` fraction digits, rounding half-up at
/// the last place.  places == 0 emits just the integer part.
std::string format_sex(double x, int places);

}  // namespace orbkin

#endif
