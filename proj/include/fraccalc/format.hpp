#ifndef FRACCALC_FORMAT_HPP_
#define FRACCALC_FORMAT_HPP_

#include <charconv>
#include <cstdio>
#include <string>

namespace fraccalc {

/// 17 significant digits; parses back to the identical double.
inline std::string format_sig17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Shortest representation that round-trips.
inline std::string format_short(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace fraccalc

#endif  // FRACCALC_FORMAT_HPP_
