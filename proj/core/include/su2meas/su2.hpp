#ifndef SU2MEAS_SU2_HPP
#define SU2MEAS_SU2_HPP

#include <complex>

#include "su2meas/coords.hpp"
#include "su2meas/rng.hpp"

namespace su2meas::su2 {

/// A matrix of SU(2), stored as the pair (a, b) of its first column:
///
///     [ a  -conj(b) ]
///     [ b   conj(a) ]
///
/// with |a|^2 + |b|^2 = 1. Unit determinant and unitarity follow from the
/// block form, so the only invariant to maintain is the normalization.
class SU2Matrix {
 public:
  /// Identity.
  SU2Matrix() : a_(1.0, 0.0), b_(0.0, 0.0) {}

  /// Validates |a|^2 + |b|^2 = 1 within 1e-12, then renormalizes exactly.
  SU2Matrix(std::complex<double> a, std::complex<double> b);

  static SU2Matrix identity() { return {}; }

  std::complex<double> a() const noexcept { return a_; }
  std::complex<double> b() const noexcept { return b_; }

 private:
  std::complex<double> a_;
  std::complex<double> b_;
};

/// w |-> U w. Preserves the norm.
coords::CartesianPoint apply(const SU2Matrix& u, const coords::CartesianPoint& w);

/// Matrix product, renormalized to stop drift over long products.
SU2Matrix compose(const SU2Matrix& u, const SU2Matrix& v);

/// Conjugate transpose (= group inverse).
SU2Matrix inverse(const SU2Matrix& u);

/// The matrix U_w with U_w w = (|w|, 0): rows (conj(alpha)/l, conj(beta)/l)
/// and (-beta/l, alpha/l). Throws ZeroVectorError at the origin.
SU2Matrix aligning_matrix(const coords::CartesianPoint& w);

/// Draw from the Haar probability on SU(2): four independent standard
/// normals form (a, b), which is normalized to the unit sphere of C^2.
/// Rotation invariance of the 4-d Gaussian makes the result Haar-uniform.
SU2Matrix haar_sample(RandomStream& rng);

}  // namespace su2meas::su2

#endif  // SU2MEAS_SU2_HPP
