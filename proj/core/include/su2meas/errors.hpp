#ifndef SU2MEAS_ERRORS_HPP
#define SU2MEAS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace su2meas {

/// The origin of C^2 is excluded from every coordinate chart.
class ZeroVectorError : public std::domain_error {
 public:
  ZeroVectorError() : std::domain_error("point is the origin of C^2") {}
};

/// A radial profile with vanishing third moment cannot be normalized.
class ZeroMassError : public std::domain_error {
 public:
  ZeroMassError() : std::domain_error("radial profile has zero third moment") {}
};

/// The tail of l^3 f(l) kept contributing past the truncation cap.
class DivergentMomentError : public std::runtime_error {
 public:
  DivergentMomentError()
      : std::runtime_error("third moment quadrature failed to converge") {}
};

/// Both magnitudes of a Born-rule query were zero.
class BothZeroError : public std::domain_error {
 public:
  BothZeroError() : std::domain_error("both magnitudes are zero") {}
};

/// Malformed tabulated-profile file. `line()` is 1-based.
class ProfileParseError : public std::runtime_error {
 public:
  ProfileParseError(const std::string& file, std::size_t line, const std::string& reason)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// File could not be opened or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace su2meas

#endif  // SU2MEAS_ERRORS_HPP
