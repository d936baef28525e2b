#pragma once

#include <Eigen/Dense>

namespace su3 {

/// exp(-i t H) for Hermitian H, through its eigendecomposition.
Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& hermitian, double t);

double max_abs(const Eigen::MatrixXcd& m);
double unitarity_error(const Eigen::MatrixXcd& u);

}  // namespace su3
