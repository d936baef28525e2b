#pragma once

// Brute-force realization of SU(3) irreps on the Fock space of three particles
// in a two-dimensional oscillator. Particle i has mode occupations (n_i1, n_i2),
// spin s_i = (n_i1 + n_i2)/2 and projection m_i = (n_i1 - n_i2)/2.
//
// Irrep (lambda, mu) is realized on the u(2)-highest-weight states with
// sigma = lambda + 2mu quanta. Basis vectors are the coupled states
//   |nu I> = sum <nu2/2 m2; nu3/2 m3 | I N> <nu1/2 m1; I N | lambda/2 lambda/2>
//                |nu1/2 m1> |nu2/2 m2> |nu3/2 m3>,
// coupling [nu1 (x) [nu2 (x) nu3]^I]. With this argument order the permutation
// operators reproduce the closed-form Weyl matrix elements, including the signs
// on the highest weight state.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "su3/basis.hpp"
#include "su3/operator_matrix.hpp"
#include "su3/permutation.hpp"
#include "su3/subgroup.hpp"

namespace su3 {

using SparseOperator = Eigen::SparseMatrix<double>;

struct FockState {
  std::array<std::array<int, 2>, 3> n{};  // n[particle][mode]

  int quanta() const;
  /// Twice the total B-projection: sum_i (n_i1 - n_i2).
  int twice_projection() const;
  friend auto operator<=>(const FockState&, const FockState&) = default;
};

/// Enumerated Fock states with a fixed number of quanta, optionally restricted
/// to one eigenvalue of B11 - B22.
class FockSpace {
 public:
  explicit FockSpace(int quanta, std::optional<int> b_weight = std::nullopt);

  int quanta() const { return quanta_; }
  const std::vector<FockState>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  std::optional<std::size_t> find(const FockState& s) const;

  /// C_ij = sum_m a+_im a_jm, particles i, j in 1..3.
  SparseOperator c_operator(int i, int j) const;
  /// B_mn = sum_i a+_im a_in, modes m, n in 1..2. Terms leaving the space are dropped.
  SparseOperator b_operator(int m, int n) const;
  /// Particle permutation; particle pi(k) receives the occupations of particle k.
  SparseOperator permutation(WeylElement w) const;

 private:
  int quanta_;
  std::vector<FockState> states_;
  std::map<FockState, std::size_t> index_;
};

/// Coupled basis vector |nu I> expanded over `space`. Throws std::invalid_argument
/// for states outside the irrep and std::out_of_range if `space` lacks a component.
Eigen::VectorXd coupled_state_vector(const FockSpace& space, IrrepLabel irrep,
                                     const WeightState& w);

/// Normalized (a+_11)^lambda (a+_11 a+_22 - a+_12 a+_21)^mu |0>.
Eigen::VectorXd highest_weight_vector(const FockSpace& space, IrrepLabel irrep);

enum class Algebra { u3, u2 };

/// Spin-1 axes of the SO(3) subgroup generated by L = -i(C_23 - C_32), ...
enum class Axis { x, y, z };

/// One irrep realized on its Fock carrier space. Immutable after construction.
class BosonRealization {
 public:
  explicit BosonRealization(IrrepLabel irrep);

  IrrepLabel irrep() const { return basis_->irrep(); }
  const BasisPtr& basis() const { return basis_; }
  const FockSpace& fock() const { return fock_; }
  /// Columns are the coupled basis vectors in canonical order.
  const Eigen::MatrixXd& vectors() const { return vectors_; }

  /// Compression V^T op V of a Fock-space operator that preserves the carrier space.
  OperatorMatrix compress(const SparseOperator& op) const;

  /// u3: C_ij (i, j in 1..3); u2: B_mn (m, n in 1..2), evaluated on the full
  /// sigma-quanta space and compressed (off-diagonal B_mn compress to zero).
  OperatorMatrix generator(Algebra algebra, int i, int j) const;
  OperatorMatrix permutation(WeylElement w) const;

  /// Jz = (C_ii - C_jj)/2 and Jy = (C_ij - C_ji)/2i of SU(2)_ij.
  OperatorMatrix subgroup_jz(Subgroup s) const;
  OperatorMatrix subgroup_jy(Subgroup s) const;
  /// exp(-i a Jz) exp(-i b Jy) exp(-i g Jz) by Hermitian eigendecomposition.
  OperatorMatrix subgroup_rotation(Subgroup s, const EulerAngles& e) const;

  OperatorMatrix angular_momentum(Axis axis) const;
  /// exp(-i a Lz) exp(-i b Ly) exp(-i g Lz)
  OperatorMatrix so3_rotation(double alpha, double beta, double gamma) const;

 private:
  BasisPtr basis_;
  FockSpace fock_;
  Eigen::MatrixXd vectors_;
};

OperatorMatrix generator_matrix(IrrepLabel irrep, Algebra algebra, int i, int j);
OperatorMatrix permutation_matrix_oracle(IrrepLabel irrep, WeylElement w);
OperatorMatrix subgroup_rotation_oracle(IrrepLabel irrep, Subgroup s, const EulerAngles& e);

}  // namespace su3
