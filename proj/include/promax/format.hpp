#pragma once

#include <cstdio>
#include <string>

namespace promax {

// All reals in text outputs (weights files, CSVs, fit reports) are written
// with 12 significant digits.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

}  // namespace promax
