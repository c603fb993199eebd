#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "su2meas/coords.hpp"
#include "su2meas/quadrature.hpp"

using namespace su2meas;
using su2meas::coords::half_pi;

// The four closed-form integrals used throughout the library are the
// calibration suite for the quadrature engine.

TEST_CASE("integral of sin(2 psi) over [0, x] is sin^2(x)") {
  const auto f = [](double p) { return std::sin(2.0 * p); };
  for (int i = 1; i <= 50; ++i) {
    const double x = half_pi * i / 50.0;
    const double expected = std::sin(x) * std::sin(x);
    const auto r = quad::integrate(f, 0.0, x, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - expected) <= 1e-10);
  }
}

TEST_CASE("integral of sin(2 psi) over [0, pi/2] is 1") {
  const auto r =
      quad::integrate([](double p) { return std::sin(2.0 * p); }, 0.0, half_pi);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0) <= 1e-10);
}

TEST_CASE("integral of q e^{-q/2} over [0, l] is 4 - 2(l+2) e^{-l/2}") {
  const auto f = [](double q) { return q * std::exp(-0.5 * q); };
  for (double l : {0.5, 1.0, 2.0, 3.5, 5.0, 8.0, 13.0, 21.0}) {
    const double expected = 4.0 - 2.0 * (l + 2.0) * std::exp(-0.5 * l);
    const auto r = quad::integrate(f, 0.0, l, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - expected) <= 1e-10);
  }
}

TEST_CASE("integral of q e^{-q/2} over [0, inf) is 4") {
  const auto r = quad::integrate_to_infinity(
      [](double q) { return q * std::exp(-0.5 * q); }, 0.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 4.0) <= 1e-10);
}

TEST_CASE("degenerate interval integrates to zero") {
  const auto r = quad::integrate([](double) { return 1.0; }, 2.0, 2.0);
  CHECK(r.value == 0.0);
}

TEST_CASE("simpson is exact on cubics") {
  const auto r = quad::integrate([](double q) { return q * q * q; }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("kinked integrands still meet the tolerance") {
  // piecewise-linear hat, exact area 1
  const auto hat = [](double x) {
    return x < 1.0 ? x : (x < 2.0 ? 2.0 - x : 0.0);
  };
  const auto r = quad::integrate(hat, 0.0, 3.0, 1e-12);
  CHECK(std::abs(r.value - 1.0) <= 1e-10);
}

TEST_CASE("a non-integrable tail is flagged, not returned as converged") {
  const auto r = quad::integrate_to_infinity(
      [](double q) { return 1.0 / (1.0 + q); }, 0.0);
  CHECK_FALSE(r.converged);
}

TEST_CASE("an identically zero integrand terminates immediately") {
  const auto r = quad::integrate_to_infinity([](double) { return 0.0; }, 0.0);
  CHECK(r.converged);
  CHECK(r.value == 0.0);
}
