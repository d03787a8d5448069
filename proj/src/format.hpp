#pragma once

// Internal number formatting. Not installed.

#include <charconv>
#include <cstdio>
#include <string>

namespace clireval::detail {

/// Shortest round-trip decimal representation; reproducible and compact
/// ("48.34" stays "48.34").
inline std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return std::string(buf);
}

}  // namespace clireval::detail
