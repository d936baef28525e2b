#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "su3/oracle.hpp"

using namespace su3;
using su3::testing::max_abs;

namespace {

std::vector<IrrepLabel> irreps_up_to(int sigma) {
  std::vector<IrrepLabel> out;
  for (int mu = 0; 2 * mu <= sigma; ++mu)
    for (int lambda = 0; lambda + 2 * mu <= sigma; ++lambda) out.push_back({lambda, mu});
  return out;
}

Eigen::MatrixXd dense(const SparseOperator& op) { return Eigen::MatrixXd(op); }

}  // namespace

TEST_CASE("one-quantum coupled state is a single Fock state") {
  const FockSpace space(1, 1);
  const Eigen::VectorXd v = coupled_state_vector(space, {1, 0}, {{1, 0, 0}, HalfInt(0)});
  FockState f;
  f.n = {{{1, 0}, {0, 0}, {0, 0}}};
  const auto idx = space.find(f);
  REQUIRE(idx.has_value());
  CHECK(std::abs(v[static_cast<Eigen::Index>(*idx)] - 1.0) < 1e-15);
  CHECK(std::abs(v.norm() - 1.0) < 1e-15);
  CHECK_THROWS_AS(coupled_state_vector(space, {1, 0}, {{0, 1, 0}, HalfInt(0)}),
                  std::invalid_argument);
}

TEST_CASE("coupled states: norms, weights, SU(2)_23 labels and orthogonality") {
  for (IrrepLabel irrep : irreps_up_to(8)) {
    const BosonRealization real(irrep);
    const Eigen::MatrixXd& v = real.vectors();
    const auto n = v.cols();
    CHECK(max_abs((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).cast<std::complex<double>>()) <
          1e-12);
    const FockSpace& fock = real.fock();
    const Eigen::MatrixXd c22 = dense(fock.c_operator(2, 2)), c33 = dense(fock.c_operator(3, 3));
    const Eigen::MatrixXd jz = 0.5 * (c22 - c33);
    const Eigen::MatrixXd jp = dense(fock.c_operator(2, 3)), jm = dense(fock.c_operator(3, 2));
    const Eigen::MatrixXd casimir = jz * jz + 0.5 * (jp * jm + jm * jp);
    double worst = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const WeightState& w = (*real.basis())[static_cast<std::size_t>(k)];
      for (int i = 1; i <= 3; ++i) {
        const Eigen::VectorXd r = fock.c_operator(i, i) * v.col(k) - w.nu[i - 1] * v.col(k);
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
      }
      const double s = w.spin.value();
      worst = std::max(worst, (casimir * v.col(k) - s * (s + 1) * v.col(k)).cwiseAbs().maxCoeff());
      worst = std::max(worst,
                       (jz * v.col(k) - w.projection().value() * v.col(k)).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("highest weight vector matches the coupled highest weight state") {
  for (IrrepLabel irrep : irreps_up_to(8)) {
    const BosonRealization real(irrep);
    const Eigen::VectorXd hw = highest_weight_vector(real.fock(), irrep);
    const auto k = real.basis()->index_of(highest_weight_state(irrep));
    const double overlap = hw.dot(real.vectors().col(static_cast<Eigen::Index>(k)));
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-12);
  }
}

TEST_CASE("u(3) generators: diagonal weights and highest weight conditions") {
  for (IrrepLabel irrep : irreps_up_to(8)) {
    const BosonRealization real(irrep);
    const auto& basis = *real.basis();
    const auto hw = basis.index_of(highest_weight_state(irrep));
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i) {
      const OperatorMatrix cii = real.generator(Algebra::u3, i, i);
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t l = 0; l < basis.size(); ++l)
          worst = std::max(worst, std::abs(cii.entries(k, l) - (k == l ? basis[k].nu[i - 1] : 0.0)));
    }
    CHECK(worst < 1e-12);
    // raising operators annihilate the highest weight
    for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
      const OperatorMatrix raise = real.generator(Algebra::u3, i, j);
      CHECK(raise.entries.col(static_cast<Eigen::Index>(hw)).cwiseAbs().maxCoeff() < 1e-12);
    }
    const OperatorMatrix h1 = real.generator(Algebra::u3, 1, 1) - real.generator(Algebra::u3, 2, 2);
    const OperatorMatrix h2 = real.generator(Algebra::u3, 2, 2) - real.generator(Algebra::u3, 3, 3);
    CHECK(std::abs(h1.entries(hw, hw) - double(irrep.lambda)) < 1e-12);
    CHECK(std::abs(h2.entries(hw, hw) - double(irrep.mu)) < 1e-12);
    CHECK(std::abs(real.generator(Algebra::u3, 3, 3).entries(hw, hw)) < 1e-12);
  }
}

TEST_CASE("u(2) highest weight conditions") {
  for (IrrepLabel irrep : irreps_up_to(8)) {
    const BosonRealization real(irrep);
    const auto hw = real.basis()->index_of(highest_weight_state(irrep));
    const OperatorMatrix b11 = real.generator(Algebra::u2, 1, 1);
    const OperatorMatrix b22 = real.generator(Algebra::u2, 2, 2);
    const OperatorMatrix b12 = real.generator(Algebra::u2, 1, 2);
    CHECK(std::abs(b11.entries(hw, hw) - double(irrep.lambda + irrep.mu)) < 1e-12);
    CHECK(std::abs(b22.entries(hw, hw) - double(irrep.mu)) < 1e-12);
    CHECK(max_abs(b12.entries) < 1e-12);

    // the same statement directly on Fock vectors: B12 kills every basis vector
    const FockSpace full(irrep.quanta());
    Eigen::MatrixXd embedded = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(full.size()),
                                                     real.vectors().cols());
    for (std::size_t k = 0; k < real.fock().size(); ++k)
      embedded.row(static_cast<Eigen::Index>(*full.find(real.fock().states()[k]))) =
          real.vectors().row(static_cast<Eigen::Index>(k));
    const Eigen::MatrixXd image = full.b_operator(1, 2) * embedded;
    CHECK(image.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("u(3) commutation relations for lambda + 2mu <= 8") {
  for (IrrepLabel irrep : irreps_up_to(8)) {
    const BosonRealization real(irrep);
    std::array<std::array<OperatorMatrix, 3>, 3> c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c[i][j] = real.generator(Algebra::u3, i + 1, j + 1);
    const OperatorMatrix zero = OperatorMatrix::zero(real.basis());
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) {
            OperatorMatrix expected = zero;
            if (j == k) expected.entries += c[i][l].entries;
            if (i == l) expected.entries -= c[k][j].entries;
            worst = std::max(worst, max_abs_diff(commutator(c[i][j], c[k][l]), expected));
          }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("u(3) and u(2) generators commute on the full Fock space") {
  for (int sigma = 0; sigma <= 4; ++sigma) {
    const FockSpace full(sigma);
    double worst = 0.0;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int m = 1; m <= 2; ++m)
          for (int n = 1; n <= 2; ++n) {
            const Eigen::MatrixXd c = dense(full.c_operator(i, j));
            const Eigen::MatrixXd b = dense(full.b_operator(m, n));
            worst = std::max(worst, (c * b - b * c).cwiseAbs().maxCoeff());
          }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("coupled basis spans the orbit of the highest weight") {
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BosonRealization real(irrep);
    const FockSpace& fock = real.fock();
    // Gram-Schmidt closure of the hw vector under all C_ij
    std::vector<Eigen::VectorXd> orbit{highest_weight_vector(fock, irrep)};
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          Eigen::VectorXd v = fock.c_operator(i, j) * orbit[k];
          for (const auto& u : orbit) v -= u.dot(v) * u;
          if (v.norm() > 1e-9) orbit.push_back(v / v.norm());
        }
    CHECK(orbit.size() == real.basis()->size());
    const Eigen::MatrixXd& basis = real.vectors();
    double worst = 0.0;
    for (const auto& u : orbit)
      worst = std::max(worst, (u - basis * (basis.transpose() * u)).cwiseAbs().maxCoeff());
    CHECK(worst < 1e-12);
    // and the compressed generators are exact, not truncated
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const Eigen::MatrixXd img = fock.c_operator(i, j) * basis;
        CHECK((img - basis * (basis.transpose() * img)).cwiseAbs().maxCoeff() < 1e-12);
      }
  }
}

TEST_CASE("permutations: identity, involutions and representation property") {
  for (IrrepLabel irrep : irreps_up_to(8)) {
    const BosonRealization real(irrep);
    std::map<WeylElement, OperatorMatrix> p;
    for (WeylElement w : kWeylElements) p[w] = real.permutation(w);
    const OperatorMatrix id = OperatorMatrix::identity(real.basis());
    CHECK(max_abs_diff(p[WeylElement::identity], id) < 1e-12);
    CHECK(max_abs_diff(p[WeylElement::p12] * p[WeylElement::p12], id) < 1e-12);
    double worst = 0.0;
    for (WeylElement a : kWeylElements) {
      worst = std::max(worst, unitarity_error(p[a]));
      for (WeylElement b : kWeylElements)
        worst = std::max(worst, max_abs_diff(p[a] * p[b], p[compose(a, b)]));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("permutation oracle on the highest weight") {
  for (IrrepLabel irrep : irreps_up_to(8)) {
    const OperatorMatrix p12 = permutation_matrix_oracle(irrep, WeylElement::p12);
    const auto& basis = *p12.basis;
    const int l = irrep.lambda, m = irrep.mu;
    const WeightState hw = highest_weight_state(irrep);
    const WeightState target{{m, l + m, 0}, HalfInt::from_twice(l + m)};
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(p12.at(target, hw) - sign) < 1e-12);
    const OperatorMatrix p123 = permutation_matrix_oracle(irrep, WeylElement::p123);
    CHECK(std::abs(p123.at({{0, l + m, m}, HalfInt::from_twice(l)}, hw) - 1.0) < 1e-12);
    CHECK(basis.size() == static_cast<std::size_t>(dimension(irrep)));
  }
}

TEST_CASE("permutation conjugates subgroup generators") {
  for (IrrepLabel irrep : irreps_up_to(8)) {
    const BosonRealization real(irrep);
    const OperatorMatrix p132 = real.permutation(WeylElement::p132);
    const OperatorMatrix p123 = real.permutation(WeylElement::p123);
    const OperatorMatrix p12 = real.permutation(WeylElement::p12);
    const auto c = [&](int i, int j) { return real.generator(Algebra::u3, i, j); };
    CHECK(max_abs_diff(c(1, 2), p132 * c(2, 3) * p123) < 1e-12);
    CHECK(max_abs_diff(c(2, 1), p132 * c(3, 2) * p123) < 1e-12);
    CHECK(max_abs_diff(c(1, 3), p12 * c(2, 3) * p12) < 1e-12);
  }
}

TEST_CASE("subgroup rotations") {
  const EulerAngles e{0.7, 1.3, -2.1};
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BosonRealization real(irrep);
    const OperatorMatrix id = OperatorMatrix::identity(real.basis());
    for (Subgroup s : {Subgroup::s12, Subgroup::s13, Subgroup::s23}) {
      CHECK(max_abs_diff(real.subgroup_rotation(s, {}), id) < 1e-12);
      CHECK(unitarity_error(real.subgroup_rotation(s, e)) < 1e-12);
    }
    // SU(2)_23 keeps nu1 and I
    const OperatorMatrix r23 = real.subgroup_rotation(Subgroup::s23, e);
    const auto& basis = *real.basis();
    double off_block = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t l = 0; l < basis.size(); ++l)
        if (basis[k].nu[0] != basis[l].nu[0] || basis[k].spin != basis[l].spin)
          off_block = std::max(off_block, std::abs(r23.entries(k, l)));
    CHECK(off_block < 1e-12);
    const OperatorMatrix r12 = real.subgroup_rotation(Subgroup::s12, e);
    const OperatorMatrix conj =
        real.permutation(WeylElement::p132) * r23 * real.permutation(WeylElement::p123);
    CHECK(max_abs_diff(r12, conj) < 1e-12);
  }
}

TEST_CASE("oracle argument checks") {
  const FockSpace space(2);
  CHECK_THROWS_AS(space.c_operator(0, 1), std::out_of_range);
  CHECK_THROWS_AS(space.b_operator(1, 3), std::out_of_range);
  CHECK_THROWS_AS(FockSpace(-1), std::invalid_argument);
  CHECK_THROWS_AS(coupled_state_vector(space, {1, 0}, {{1, 0, 0}, HalfInt(0)}),
                  std::invalid_argument);
}
