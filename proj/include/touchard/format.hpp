#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "touchard/log_complex.hpp"

namespace touchard {

// Scientific notation in the x.xxxxx(+-yy) style used by the reference
// tables: mantissa in [1, 10) followed by the decimal exponent in parens.
inline std::string format_paper(double value, int digits = 6) {
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%+.*e", digits - 1, value);
  std::string s(buf);
  auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  int expo = std::atoi(s.c_str() + epos + 1);
  std::snprintf(buf, sizeof(buf), "%s(%+03d)", mant.c_str(), expo);
  return buf;
}

inline std::string format_paper_log(const LogComplexD& v, int digits = 6) {
  if (v.is_zero()) return "0";
  const double l10 = v.log_mag / std::log(10.0);
  double expo = std::floor(l10);
  double mant = std::pow(10.0, l10 - expo);
  double c = std::cos(v.phase), s = std::sin(v.phase);
  // real-axis values print as signed reals
  if (std::abs(s) < 1e-9) {
    double m = mant * (c < 0 ? -1.0 : 1.0);
    if (std::abs(m) >= 10.0) { m /= 10.0; expo += 1.0; }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%+.*f(%+03d)", digits - 1, m, static_cast<int>(expo));
    return buf;
  }
  std::string re = format_paper(v.real_part(), digits);
  std::string im = format_paper(v.imag_part(), digits);
  return re + (v.imag_part() < 0 ? "" : "+") + im + "i";
}

// Decimal string at the given significant digits; used for JSON payloads so
// values survive a round-trip without double rounding.
inline std::string decimal_string(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

}  // namespace touchard
