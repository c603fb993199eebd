#include "profile_arg.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>

namespace su2meas::tools {

namespace {

double parse_positive(std::string_view text, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(value > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be a positive number");
  }
  return value;
}

}  // namespace

radial::RadialProfile parse_profile_spec(const std::string& spec) {
  const std::string_view view(spec);
  if (view == "gaussian") return radial::RadialProfile::gaussian();

  const auto colon = view.find(':');
  const std::string_view kind = view.substr(0, colon);
  const std::string_view arg =
      colon == std::string_view::npos ? std::string_view{} : view.substr(colon + 1);

  if (kind == "exponential") {
    return radial::RadialProfile::exponential(parse_positive(arg, "rate"));
  }
  if (kind == "ball") {
    return radial::RadialProfile::ball_uniform(parse_positive(arg, "radius"));
  }
  if (kind == "tabulated") {
    if (arg.empty()) throw std::invalid_argument("tabulated profile needs a path");
    return radial::RadialProfile::from_csv(std::string(arg));
  }
  throw std::invalid_argument(
      "unknown profile `" + spec +
      "`; expected gaussian | exponential:<rate> | ball:<R> | tabulated:<path>");
}

}  // namespace su2meas::tools
