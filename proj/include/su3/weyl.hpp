#pragma once

// Weyl group matrices in the weight basis. P12, P123 and P132 have closed forms as
// 6-j recoupling coefficients; P13 = P12 P132 and P23 = P12 P123 follow from the
// group law.

#include "su3/basis.hpp"
#include "su3/operator_matrix.hpp"
#include "su3/permutation.hpp"

namespace su3 {

/// <row| P |col> from the closed forms. Defined for e, P12, P123 and P132;
/// throws std::invalid_argument for P13 and P23, and ConsistencyError when a
/// nonzero 6-j meets a half-integral sign exponent.
double weyl_closed_form_element(IrrepLabel irrep, WeylElement w, const WeightState& row,
                                const WeightState& col);

OperatorMatrix weyl_matrix(const BasisPtr& basis, WeylElement w);
OperatorMatrix weyl_matrix(IrrepLabel irrep, WeylElement w);

}  // namespace su3
