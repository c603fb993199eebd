#ifndef SU2MEAS_TOOLS_PROFILE_ARG_HPP
#define SU2MEAS_TOOLS_PROFILE_ARG_HPP

#include <string>

#include "su2meas/radial.hpp"

namespace su2meas::tools {

/// Parse a --profile argument:
///   gaussian | exponential:<rate> | ball:<R> | tabulated:<path>
/// Throws std::invalid_argument for an unknown kind or bad parameter,
/// IoError when a tabulated file cannot be opened, ProfileParseError when
/// it cannot be parsed.
radial::RadialProfile parse_profile_spec(const std::string& spec);

}  // namespace su2meas::tools

#endif  // SU2MEAS_TOOLS_PROFILE_ARG_HPP
