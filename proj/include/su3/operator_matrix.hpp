#pragma once

#include <Eigen/Dense>

#include "su3/basis.hpp"

namespace su3 {

/// Dense complex matrix over an irrep basis; rows and columns follow basis order.
struct OperatorMatrix {
  BasisPtr basis;
  Eigen::MatrixXcd entries;

  OperatorMatrix() = default;
  OperatorMatrix(BasisPtr b, Eigen::MatrixXcd m);

  static OperatorMatrix identity(BasisPtr b);
  static OperatorMatrix zero(BasisPtr b);

  std::size_t size() const { return basis ? basis->size() : 0; }
  IrrepLabel irrep() const { return basis->irrep(); }

  std::complex<double>& at(const WeightState& row, const WeightState& col);
  std::complex<double> at(const WeightState& row, const WeightState& col) const;

  OperatorMatrix adjoint() const;
};

/// Product of two matrices on the same irrep; throws std::invalid_argument otherwise.
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);

/// Commutator [a, b].
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// max |a_ij - b_ij|
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);
double max_abs(const OperatorMatrix& a);
/// max |(U^dagger U - 1)_ij|
double unitarity_error(const OperatorMatrix& u);

}  // namespace su3
