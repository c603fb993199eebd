#ifndef SU2MEAS_FORMAT_HPP
#define SU2MEAS_FORMAT_HPP

#include <cstdio>
#include <string>

namespace su2meas {

/// 17-significant-digit decimal: enough for binary round-trips, so equal
/// doubles always print as equal text.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace su2meas

#endif  // SU2MEAS_FORMAT_HPP
