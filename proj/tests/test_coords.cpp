#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "su2meas/coords.hpp"
#include "su2meas/errors.hpp"
#include "su2meas/rng.hpp"

using namespace su2meas;
using namespace su2meas::coords;

namespace {

double max_component_error(const CartesianPoint& a, const CartesianPoint& b) {
  const double scale = std::max(norm(a), 1e-300);
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.u - b.u), std::abs(a.v - b.v)}) /
         scale;
}

CartesianPoint random_point(RandomStream& rng) {
  for (;;) {
    const CartesianPoint w{20.0 * rng.uniform01() - 10.0,
                           20.0 * rng.uniform01() - 10.0,
                           20.0 * rng.uniform01() - 10.0,
                           20.0 * rng.uniform01() - 10.0};
    if (norm(w) > 1e-9) return w;
  }
}

// 4x4 determinant by Gaussian elimination with partial pivoting; the
// independent oracle for the analytic Jacobians.
double det4(std::array<std::array<double, 4>, 4> m) {
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 4; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < 4; ++row) {
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

double numeric_hopf_jacobian(const HopfPoint& h) {
  constexpr double step = 1e-6;
  std::array<double, 4> center{h.l, h.psi, h.phi, h.theta};
  std::array<std::array<double, 4>, 4> jac{};
  for (int j = 0; j < 4; ++j) {
    auto hi = center;
    auto lo = center;
    hi[j] += step;
    lo[j] -= step;
    const auto p_hi = from_hopf({hi[0], hi[1], hi[2], hi[3]});
    const auto p_lo = from_hopf({lo[0], lo[1], lo[2], lo[3]});
    jac[0][j] = (p_hi.x - p_lo.x) / (2.0 * step);
    jac[1][j] = (p_hi.y - p_lo.y) / (2.0 * step);
    jac[2][j] = (p_hi.u - p_lo.u) / (2.0 * step);
    jac[3][j] = (p_hi.v - p_lo.v) / (2.0 * step);
  }
  return std::abs(det4(jac));
}

}  // namespace

TEST_CASE("eta covers the four axes and the shifted quadrant") {
  CHECK(eta(0.0, 1.0) == 0.0);
  CHECK(eta(1.0, 0.0) == doctest::Approx(half_pi));
  CHECK(eta(-1.0, 1.0) == doctest::Approx(7.0 * pi / 4.0));
  CHECK(eta(0.0, -1.0) == doctest::Approx(pi));
  CHECK(eta(0.0, 0.0) == 0.0);  // convention on the null set
}

TEST_CASE("eta stays inside [0, 2pi)") {
  CHECK(eta(-1e-300, 1.0) < two_pi);
  CHECK(eta(-1e-300, 1.0) >= 0.0);
  RandomStream rng(31);
  for (int i = 0; i < 10000; ++i) {
    const double a = eta(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    CHECK(a >= 0.0);
    CHECK(a < two_pi);
  }
}

TEST_CASE("double polar chart evaluates the closed forms") {
  const auto axis = from_double_polar({1.0, 0.0, 0.0, 0.0});
  CHECK(axis.x == doctest::Approx(1.0));
  CHECK(axis.y == doctest::Approx(0.0).scale(1));

  const auto mixed = from_double_polar({1.0, 1.0, half_pi, pi});
  CHECK(mixed.x == doctest::Approx(0.0).scale(1));
  CHECK(mixed.y == doctest::Approx(1.0));
  CHECK(mixed.u == doctest::Approx(-1.0));
  CHECK(mixed.v == doctest::Approx(0.0).scale(1));

  const auto generic = from_double_polar({2.0, 3.0, pi / 4.0, pi / 6.0});
  CHECK(generic.x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(generic.y == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(generic.u == doctest::Approx(1.5 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(generic.v == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("double polar inverse recovers radii and angles") {
  const auto p = to_double_polar({1.0, 0.0, 0.0, 0.0});
  CHECK(p.r == 1.0);
  CHECK(p.rho == 0.0);
  CHECK(p.phi == 0.0);
  CHECK(p.theta == 0.0);

  const auto q = to_double_polar({0.0, 1.0, -1.0, 0.0});
  CHECK(q.r == doctest::Approx(1.0));
  CHECK(q.rho == doctest::Approx(1.0));
  CHECK(q.phi == doctest::Approx(half_pi));
  CHECK(q.theta == doctest::Approx(pi));

  const auto triple = to_double_polar({3.0, 4.0, 0.0, 0.0});
  CHECK(triple.r == doctest::Approx(5.0));
  CHECK(triple.rho == 0.0);
  CHECK(triple.phi == doctest::Approx(std::atan2(4.0, 3.0)));
  CHECK(triple.theta == 0.0);

  CHECK_THROWS_AS(to_double_polar({0.0, 0.0, 0.0, 0.0}), ZeroVectorError);
}

TEST_CASE("hopf chart evaluates the closed forms") {
  const auto on_alpha = from_hopf({1.0, 0.0, 0.0, 0.0});
  CHECK(on_alpha.x == doctest::Approx(1.0));
  CHECK(on_alpha.u == doctest::Approx(0.0).scale(1));

  const auto on_beta = from_hopf({1.0, half_pi, 0.0, 0.0});
  CHECK(on_beta.x == doctest::Approx(0.0).scale(1));
  CHECK(on_beta.u == doctest::Approx(1.0));

  const auto diag = from_hopf({2.0, pi / 4.0, 0.0, 0.0});
  CHECK(diag.x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(diag.u == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("hopf inverse recovers the angles, psi = pi/2 exactly at alpha = 0") {
  const auto h = to_hopf({1.0, 0.0, 0.0, 0.0});
  CHECK(h.l == 1.0);
  CHECK(h.psi == 0.0);

  const auto beta_axis = to_hopf({0.0, 0.0, 1.0, 0.0});
  CHECK(beta_axis.l == 1.0);
  CHECK(beta_axis.psi == half_pi);  // exact by the atan2 convention

  const auto diag = to_hopf({1.0, 0.0, 1.0, 0.0});
  CHECK(diag.l == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(diag.psi == doctest::Approx(pi / 4.0).epsilon(1e-15));

  CHECK_THROWS_AS(to_hopf({0.0, 0.0, 0.0, 0.0}), ZeroVectorError);
}

TEST_CASE("jacobians match their closed forms") {
  CHECK(jacobian_double_polar({1.0, 1.0, 0.3, 0.4}) == 1.0);
  CHECK(jacobian_double_polar({0.0, 5.0, 0.0, 0.0}) == 0.0);
  CHECK(jacobian_double_polar({2.0, 3.0, 1.0, 2.0}) == 6.0);

  CHECK(jacobian_hopf({1.0, pi / 4.0, 0.0, 0.0}) == doctest::Approx(0.5));
  CHECK(jacobian_hopf({1.0, 0.0, 0.0, 0.0}) == 0.0);
  CHECK(jacobian_hopf({2.0, pi / 4.0, 0.0, 0.0}) == doctest::Approx(4.0));
}

TEST_CASE("round trips reproduce 1e5 random points to 1e-12") {
  RandomStream rng(7);
  double worst_hopf = 0.0;
  double worst_polar = 0.0;
  double worst_norm = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const auto w = random_point(rng);
    worst_hopf = std::max(worst_hopf, max_component_error(w, from_hopf(to_hopf(w))));
    worst_polar = std::max(
        worst_polar, max_component_error(w, from_double_polar(to_double_polar(w))));
    const double l = to_hopf(w).l;
    const double direct =
        std::sqrt(w.x * w.x + w.y * w.y + w.u * w.u + w.v * w.v);
    worst_norm = std::max(worst_norm, std::abs(l - direct) / direct);
  }
  CHECK(worst_hopf <= 1e-12);
  CHECK(worst_polar <= 1e-12);
  CHECK(worst_norm <= 1e-13);
}

TEST_CASE("hopf jacobian agrees with the numerically differentiated determinant") {
  RandomStream rng(11);
  for (int i = 0; i < 100; ++i) {
    const HopfPoint h{0.5 + 2.5 * rng.uniform01(),
                      0.1 + (half_pi - 0.2) * rng.uniform01(),
                      0.1 + (two_pi - 0.2) * rng.uniform01(),
                      0.1 + (two_pi - 0.2) * rng.uniform01()};
    const double analytic = jacobian_hopf(h);
    const double numeric = numeric_hopf_jacobian(h);
    CHECK(std::abs(analytic - numeric) <= 1e-6 * std::abs(numeric));
  }
}

TEST_CASE("charts are compatible: r = l cos(psi), rho = l sin(psi)") {
  RandomStream rng(13);
  for (int i = 0; i < 1000; ++i) {
    const HopfPoint h{0.1 + 5.0 * rng.uniform01(), half_pi * rng.uniform01(),
                      two_pi * rng.uniform01(), two_pi * rng.uniform01()};
    const auto p = to_double_polar(from_hopf(h));
    CHECK(p.r == doctest::Approx(h.l * std::cos(h.psi)).epsilon(1e-12));
    CHECK(p.rho == doctest::Approx(h.l * std::sin(h.psi)).epsilon(1e-12));
  }
}

TEST_CASE("norm is overflow-safe for huge components") {
  const CartesianPoint big{1e150, -1e150, 1e150, 1e150};
  CHECK(std::isfinite(norm(big)));
  CHECK(norm(big) == doctest::Approx(2e150));
}

TEST_CASE("invalid chart inputs are rejected") {
  CHECK_THROWS_AS(from_hopf({-1.0, 0.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(from_hopf({1.0, 2.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(from_double_polar({-1.0, 0.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(from_double_polar({0.0, 0.0, 0.0, 0.0}), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(to_hopf({nan, 0.0, 0.0, 0.0}), std::invalid_argument);
}
