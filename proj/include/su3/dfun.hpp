#pragma once

// SU(3) Wigner functions for g = R23(a1,b1,g1) R12(a2,b2,a2) R23(a3,b3,g3),
// assembled from SU(2)_23 D-functions and closed-form Weyl matrices.

#include <array>
#include <complex>
#include <span>

#include <Eigen/Dense>

#include "su3/basis.hpp"
#include "su3/operator_matrix.hpp"
#include "su3/subgroup.hpp"

namespace su3 {

struct SU3Params {
  double alpha1 = 0.0, beta1 = 0.0, gamma1 = 0.0;
  double alpha2 = 0.0, beta2 = 0.0;
  double alpha3 = 0.0, beta3 = 0.0, gamma3 = 0.0;

  std::array<double, 8> to_array() const;
  /// Throws std::invalid_argument unless exactly eight values are given.
  static SU3Params from_array(std::span<const double> values);

  EulerAngles left() const { return {alpha1, beta1, gamma1}; }
  EulerAngles middle() const { return {alpha2, beta2, alpha2}; }
  EulerAngles right() const { return {alpha3, beta3, gamma3}; }
};

/// R23 entries are delta(nu1' nu1) delta(I' I) D^I_{M' M}; R12 = P132 R23 P123 and
/// R13 = P12 R23 P12.
OperatorMatrix su2_subgroup_matrix(const BasisPtr& basis, Subgroup s, const EulerAngles& e);
OperatorMatrix su2_subgroup_matrix(IrrepLabel irrep, Subgroup s, const EulerAngles& e);

/// R23(left) P132 R23(middle) P123 R23(right) as a matrix product.
OperatorMatrix su3_wigner_matrix(const BasisPtr& basis, const SU3Params& params);
OperatorMatrix su3_wigner_matrix(IrrepLabel irrep, const SU3Params& params);

/// One entry <row| g |col> evaluated as an explicit sum over the intermediate
/// labels (sigma2, J) of the two Weyl factors.
std::complex<double> su3_wigner_entry(IrrepLabel irrep, const SU3Params& params,
                                      const WeightState& row, const WeightState& col);

/// SO(3) rotation exp(-i a Lz) exp(-i b Ly) exp(-i g Lz), entrywise from the
/// index sum over reduced d-functions at angles 2a, 2b, 2g.
OperatorMatrix so3_matrix(const BasisPtr& basis, double alpha, double beta, double gamma);
OperatorMatrix so3_matrix(IrrepLabel irrep, double alpha, double beta, double gamma);
double so3_entry(IrrepLabel irrep, double alpha, double beta, double gamma,
                 const WeightState& row, const WeightState& col);

/// Same rotation as the product R23(0,2a,0) P132 R23(0,2b,0) P123 R23(0,2g,0).
OperatorMatrix so3_matrix_factorized(const BasisPtr& basis, double alpha, double beta,
                                     double gamma);

/// Parameters whose SU(3) element is the SO(3) rotation above.
SU3Params so3_params(double alpha, double beta, double gamma);

/// A (1,0) matrix re-indexed so that row/column k is the state of weight e_k.
Eigen::Matrix3cd to_defining_matrix(const OperatorMatrix& m);

}  // namespace su3
