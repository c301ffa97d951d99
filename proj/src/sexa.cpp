#include "orbkin/sexa.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

namespace orbkin {

double SexNum::value() const {
  double v = static_cast<double>(integer_part);
  double scale = 1.0;
  for (int d : fraction_digits) {
    scale /= 60.0;
    v += d * scale;
  }
  return sign * v;
}

namespace {

long long read_int(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw SexParseError("expected digits", pos);
  long long v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    ++pos;
  }
  return v;
}

}  // namespace

SexNum parse_sex(std::string_view text) {
  SexNum out;
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') {
    out.sign = -1;
    ++pos;
  }
  out.integer_part = read_int(text, pos);
  if (pos < text.size() && text[pos] == ';') {
    ++pos;
    for (;;) {
      std::size_t digit_pos = pos;
      long long d = read_int(text, pos);
      if (d >= 60)
        throw SexParseError("fraction digit " + std::to_string(d) + " >= 60",
                            digit_pos);
      out.fraction_digits.push_back(static_cast<int>(d));
      if (pos < text.size() && text[pos] == ',')
        ++pos;
      else
        break;
    }
  }
  if (pos != text.size())
    throw SexParseError("trailing characters", pos);
  if (out.integer_part == 0) {
    bool all_zero = true;
    for (int d : out.fraction_digits)
      if (d != 0) all_zero = false;
    if (all_zero) out.sign = +1;  // normalize -0
  }
  return out;
}

double to_degrees(const SexNum& x) { return x.value(); }

std::string format_sex(double x, int places) {
  bool neg = x < 0;
  double mag = std::abs(x);
  // round half-up at the last place
  double scale = 1.0;
  for (int i = 0; i < places; ++i) scale *= 60.0;
  auto total = static_cast<long long>(std::floor(mag * scale + 0.5));
  if (total == 0) neg = false;

  std::vector<long long> digits(places);
  for (int i = places - 1; i >= 0; --i) {
    digits[i] = total % 60;
    total /= 60;
  }
  std::string s = neg ? "-" : "";
  s += std::to_string(total);
  for (int i = 0; i < places; ++i) {
    s += (i == 0 ? ';' : ',');
    s += std::to_string(digits[i]);
  }
  return s;
}

}  // namespace orbkin
