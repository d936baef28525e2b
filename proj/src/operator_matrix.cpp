#include "su3/operator_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "su3/linalg.hpp"

namespace su3 {

OperatorMatrix::OperatorMatrix(BasisPtr b, Eigen::MatrixXcd m)
    : basis(std::move(b)), entries(std::move(m)) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  if (entries.rows() != n || entries.cols() != n)
    throw std::invalid_argument("matrix shape does not match basis size");
}

OperatorMatrix OperatorMatrix::identity(BasisPtr b) {
  const auto n = static_cast<Eigen::Index>(b->size());
  return {std::move(b), Eigen::MatrixXcd::Identity(n, n)};
}

OperatorMatrix OperatorMatrix::zero(BasisPtr b) {
  const auto n = static_cast<Eigen::Index>(b->size());
  return {std::move(b), Eigen::MatrixXcd::Zero(n, n)};
}

std::complex<double>& OperatorMatrix::at(const WeightState& row, const WeightState& col) {
  return entries(static_cast<Eigen::Index>(basis->index_of(row)),
                 static_cast<Eigen::Index>(basis->index_of(col)));
}

std::complex<double> OperatorMatrix::at(const WeightState& row, const WeightState& col) const {
  return entries(static_cast<Eigen::Index>(basis->index_of(row)),
                 static_cast<Eigen::Index>(basis->index_of(col)));
}

OperatorMatrix OperatorMatrix::adjoint() const { return {basis, entries.adjoint()}; }

namespace {

void require_same_irrep(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (!a.basis || !b.basis || a.irrep() != b.irrep())
    throw std::invalid_argument("operator matrices belong to different irreps");
}

}  // namespace

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_irrep(a, b);
  return {a.basis, a.entries * b.entries};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_irrep(a, b);
  return {a.basis, a.entries - b.entries};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_irrep(a, b);
  return {a.basis, a.entries * b.entries - b.entries * a.entries};
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_irrep(a, b);
  return max_abs(Eigen::MatrixXcd(a.entries - b.entries));
}

double max_abs(const OperatorMatrix& a) { return max_abs(a.entries); }

double unitarity_error(const OperatorMatrix& u) { return unitarity_error(u.entries); }

}  // namespace su3
