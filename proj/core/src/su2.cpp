#include "su2meas/su2.hpp"

#include <cmath>
#include <stdexcept>

#include "su2meas/errors.hpp"

namespace su2meas::su2 {

SU2Matrix::SU2Matrix(std::complex<double> a, std::complex<double> b)
    : a_(a), b_(b) {
  const double n2 = std::norm(a) + std::norm(b);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-12) {
    throw std::invalid_argument("SU(2) column is not a unit vector");
  }
  const double n = std::sqrt(n2);
  a_ /= n;
  b_ /= n;
}

coords::CartesianPoint apply(const SU2Matrix& u, const coords::CartesianPoint& w) {
  const std::complex<double> alpha(w.x, w.y);
  const std::complex<double> beta(w.u, w.v);
  const std::complex<double> alpha_out = u.a() * alpha - std::conj(u.b()) * beta;
  const std::complex<double> beta_out = u.b() * alpha + std::conj(u.a()) * beta;
  return {alpha_out.real(), alpha_out.imag(), beta_out.real(), beta_out.imag()};
}

SU2Matrix compose(const SU2Matrix& u, const SU2Matrix& v) {
  return {u.a() * v.a() - std::conj(u.b()) * v.b(),
          u.b() * v.a() + std::conj(u.a()) * v.b()};
}

SU2Matrix inverse(const SU2Matrix& u) { return {std::conj(u.a()), -u.b()}; }

SU2Matrix aligning_matrix(const coords::CartesianPoint& w) {
  const double l = coords::norm(w);
  if (l == 0.0) throw ZeroVectorError{};
  if (!std::isfinite(l)) throw std::invalid_argument("non-finite point");
  const std::complex<double> alpha(w.x, w.y);
  const std::complex<double> beta(w.u, w.v);
  return {std::conj(alpha) / l, -beta / l};
}

SU2Matrix haar_sample(RandomStream& rng) {
  for (;;) {
    const auto [x, y] = rng.normal_pair();
    const auto [u, v] = rng.normal_pair();
    const double n = std::sqrt(x * x + y * y + u * u + v * v);
    if (n < 1e-6) continue;  // guard against catastrophic cancellation
    return {{x / n, y / n}, {u / n, v / n}};
  }
}

}  // namespace su2meas::su2
