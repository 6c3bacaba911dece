#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace hombeat {

/// Fixed numeric formatting for emitted data tables: 9 significant digits.
inline std::string fmt_g9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

inline std::string fmt_u64(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace hombeat
