#pragma once

#include <cstdio>
#include <string>

namespace hyperdga::detail {

/// Formats with 17 significant digits so serialized floats round-trip
/// exactly and byte-level determinism is testable.
inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace hyperdga::detail
