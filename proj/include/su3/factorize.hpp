#pragma once

// Factorization of SU(3) matrices as R23(a1,b1,g1) R12(a2,b2,a2) R23(a3,b3,g3).
//
// In the defining irrep an SU(2) element with Euler angles (a, b, g) is
//   [[ e^{-i(a+g)/2} cos(b/2), -e^{-i(a-g)/2} sin(b/2)],
//    [ e^{ i(a-g)/2} sin(b/2),  e^{ i(a+g)/2} cos(b/2)]],
// acting on index pair (2,3) for R23 and (1,2) for R12.

#include <random>

#include <Eigen/Dense>

#include "su3/dfun.hpp"
#include "su3/subgroup.hpp"

namespace su3 {

struct Tolerances {
  double unitarity = 1e-10;       // max |U^dagger U - 1| and |det U - 1|
  double reconstruction = 1e-11;  // max |g - compose(factorize(g))|

  /// Defaults, with `unitarity` overridden by the SU3_TOLERANCE environment variable.
  static Tolerances from_environment();
};

/// A 3x3 complex matrix that passed SU(3) validation.
class UnitaryMatrix3 {
 public:
  /// Throws ValidationError when the matrix is not special unitary within `tol`.
  static UnitaryMatrix3 validated(const Eigen::Matrix3cd& m, double tol = 1e-10);

  const Eigen::Matrix3cd& matrix() const { return m_; }

 private:
  explicit UnitaryMatrix3(const Eigen::Matrix3cd& m) : m_(m) {}
  friend UnitaryMatrix3 compose_defining(const SU3Params& params);
  Eigen::Matrix3cd m_;
};

/// max |U^dagger U - 1| combined with |det U - 1|.
double su3_deviation(const Eigen::Matrix3cd& m);

Eigen::Matrix2cd su2_from_euler(const EulerAngles& e);

/// Euler angles of [[a, b], [-b*, a*]] with b in [0, pi] and a, g in (-2pi, 2pi].
/// When beta is 0 or pi, gamma is fixed to 0. Throws ValidationError for
/// non-special-unitary input.
EulerAngles euler_from_su2(const Eigen::Matrix2cd& block, double tol = 1e-10);

SU3Params factorize_su3(const UnitaryMatrix3& g);
UnitaryMatrix3 compose_defining(const SU3Params& params);

/// Haar-distributed SU(3) element from QR of a complex Gaussian matrix.
Eigen::Matrix3cd haar_random_su3(std::mt19937_64& rng);

}  // namespace su3
