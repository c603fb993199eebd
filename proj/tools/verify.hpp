#ifndef SU2MEAS_TOOLS_VERIFY_HPP
#define SU2MEAS_TOOLS_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "su2meas/radial.hpp"
#include "su2meas/stats.hpp"

namespace su2meas::tools {

struct VerifyConfig {
  radial::RadialProfile profile = radial::RadialProfile::gaussian();
  std::uint64_t n = 100000;  // needs n >= 1000
  std::uint64_t seed = 0;
};

/// The verification suite behind `su2meas verify`: closed forms against
/// quadrature, sampled marginals against their laws, chain/Born estimates
/// against the profile-independent values, and statistical SU(2)
/// invariance. Gaussian runs add the direct-sampler cross-checks.
std::vector<stats::TestReport> run_verify_suite(const VerifyConfig& cfg);

}  // namespace su2meas::tools

#endif  // SU2MEAS_TOOLS_VERIFY_HPP
