#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "su3/angular.hpp"
#include "su3/dfun.hpp"
#include "su3/factorize.hpp"
#include "su3/oracle.hpp"
#include "su3/verify.hpp"

using namespace su3;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<IrrepLabel> irreps_up_to(int sigma) {
  std::vector<IrrepLabel> out;
  for (int mu = 0; 2 * mu <= sigma; ++mu)
    for (int lambda = 0; lambda + 2 * mu <= sigma; ++lambda) out.push_back({lambda, mu});
  return out;
}

EulerAngles random_euler(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(-2 * pi, 2 * pi), polar(0.0, pi);
  return {phase(rng), polar(rng), phase(rng)};
}

}  // namespace

TEST_CASE("parameter array round trip") {
  const SU3Params p{1, 2, 3, 4, 5, 6, 7, 8};
  const auto a = p.to_array();
  const SU3Params q = SU3Params::from_array(a);
  CHECK(q.to_array() == a);
  CHECK(p.middle().gamma == 4.0);
  const std::array<double, 3> short_list{1, 2, 3};
  CHECK_THROWS_AS(SU3Params::from_array(short_list), std::invalid_argument);
}

TEST_CASE("trivial subgroup and Wigner matrices") {
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BasisPtr basis = make_basis(irrep);
    const OperatorMatrix id = OperatorMatrix::identity(basis);
    for (Subgroup s : {Subgroup::s12, Subgroup::s13, Subgroup::s23})
      CHECK(max_abs_diff(su2_subgroup_matrix(basis, s, {}), id) < 1e-14);
    CHECK(max_abs_diff(su3_wigner_matrix(basis, {}), id) < 1e-14);
    CHECK(max_abs_diff(so3_matrix(basis, 0, 0, 0), id) < 1e-14);
  }
}

TEST_CASE("R23 is block diagonal with SU(2) D-functions") {
  const EulerAngles e{0.4, 2.2, -1.1};
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BasisPtr basis = make_basis(irrep);
    const OperatorMatrix r = su2_subgroup_matrix(basis, Subgroup::s23, e);
    for (std::size_t k = 0; k < basis->size(); ++k)
      for (std::size_t l = 0; l < basis->size(); ++l) {
        const WeightState& a = (*basis)[k];
        const WeightState& b = (*basis)[l];
        if (a.nu[0] != b.nu[0] || a.spin != b.spin) {
          CHECK(r.entries(k, l) == std::complex<double>(0.0, 0.0));
        } else {
          const auto d = wigner_D(a.spin, a.projection(), b.projection(), e.alpha, e.beta, e.gamma);
          CHECK(std::abs(r.entries(k, l) - d) < 1e-14);
        }
      }
    if (irrep == IrrepLabel{1, 1}) {
      const auto k = basis->index_of({{1, 1, 1}, HalfInt(0)});
      CHECK(std::abs(r.entries(k, k) - 1.0) < 1e-15);
    }
  }
}

TEST_CASE("subgroup matrices agree with the exponential oracle") {
  std::mt19937_64 rng(3);
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BosonRealization real(irrep);
    for (int trial = 0; trial < 3; ++trial) {
      const EulerAngles e = random_euler(rng);
      for (Subgroup s : {Subgroup::s12, Subgroup::s13, Subgroup::s23}) {
        const OperatorMatrix m = su2_subgroup_matrix(real.basis(), s, e);
        CHECK(max_abs_diff(m, real.subgroup_rotation(s, e)) < 1e-10);
        CHECK(unitarity_error(m) < 1e-12);
      }
    }
  }
}

TEST_CASE("R12 in the defining irrep") {
  const EulerAngles e{0.9, 1.7, -0.3};
  const Eigen::Matrix3cd m = to_defining_matrix(su2_subgroup_matrix(IrrepLabel{1, 0}, Subgroup::s12, e));
  Eigen::Matrix3cd expected = Eigen::Matrix3cd::Identity();
  expected.topLeftCorner<2, 2>() = su2_from_euler(e);
  CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-14);
  const Eigen::Matrix3cd oracle =
      to_defining_matrix(subgroup_rotation_oracle({1, 0}, Subgroup::s12, e));
  CHECK((oracle - expected).cwiseAbs().maxCoeff() < 1e-13);
  CHECK_THROWS_AS(to_defining_matrix(OperatorMatrix::identity(make_basis({0, 1}))),
                  std::invalid_argument);
}

TEST_CASE("Wigner matrix collapses to R23 when the other factors vanish") {
  const EulerAngles e{1.2, 0.5, 2.9};
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BasisPtr basis = make_basis(irrep);
    SU3Params p;
    p.alpha1 = e.alpha;
    p.beta1 = e.beta;
    p.gamma1 = e.gamma;
    CHECK(max_abs_diff(su3_wigner_matrix(basis, p), su2_subgroup_matrix(basis, Subgroup::s23, e)) <
          1e-14);
  }
}

TEST_CASE("Wigner matrix agrees with the product of oracle rotations") {
  std::mt19937_64 rng(17);
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BosonRealization real(irrep);
    for (int trial = 0; trial < 5; ++trial) {
      const SU3Params p = random_params(rng);
      const OperatorMatrix oracle = real.subgroup_rotation(Subgroup::s23, p.left()) *
                                    real.subgroup_rotation(Subgroup::s12, p.middle()) *
                                    real.subgroup_rotation(Subgroup::s23, p.right());
      const OperatorMatrix d = su3_wigner_matrix(real.basis(), p);
      CHECK(max_abs_diff(d, oracle) < 1e-10);
      CHECK(unitarity_error(d) < 1e-12);
    }
  }
}

TEST_CASE("index-sum entries reproduce the matrix product") {
  std::mt19937_64 rng(23);
  for (IrrepLabel irrep : irreps_up_to(5)) {
    const BasisPtr basis = make_basis(irrep);
    const SU3Params p = random_params(rng);
    const OperatorMatrix d = su3_wigner_matrix(basis, p);
    double worst = 0.0;
    for (std::size_t r = 0; r < basis->size(); ++r)
      for (std::size_t c = 0; c < basis->size(); ++c)
        worst = std::max(worst,
                         std::abs(su3_wigner_entry(irrep, p, (*basis)[r], (*basis)[c]) - d.entries(r, c)));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("defining irrep equals the composed 3x3 matrix") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const SU3Params p = random_params(rng);
    const Eigen::Matrix3cd d = to_defining_matrix(su3_wigner_matrix(IrrepLabel{1, 0}, p));
    CHECK((d - compose_defining(p).matrix()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("SO(3) rotation about z in the triplet") {
  const double alpha = 0.83;
  const OperatorMatrix m = so3_matrix(IrrepLabel{1, 0}, alpha, 0, 0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.entries);
  std::vector<std::complex<double>> found(solver.eigenvalues().data(),
                                          solver.eigenvalues().data() + 3);
  for (std::complex<double> target :
       {std::complex<double>(1.0, 0.0), std::polar(1.0, alpha), std::polar(1.0, -alpha)}) {
    double best = 1.0;
    for (auto z : found) best = std::min(best, std::abs(z - target));
    CHECK(best < 1e-13);
  }
  // SO(3) matrices of the triplet are real orthogonal
  const OperatorMatrix g = so3_matrix(IrrepLabel{1, 0}, 0.3, 1.1, -0.7);
  CHECK(g.entries.imag().cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("SO(3) routes agree") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> phase(-pi, pi), polar(0.0, pi);
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BosonRealization real(irrep);
    for (int trial = 0; trial < 3; ++trial) {
      const double a = phase(rng), b = polar(rng), c = phase(rng);
      const OperatorMatrix direct = so3_matrix(real.basis(), a, b, c);
      CHECK(max_abs_diff(direct, so3_matrix_factorized(real.basis(), a, b, c)) < 1e-10);
      CHECK(max_abs_diff(direct, real.so3_rotation(a, b, c)) < 1e-10);
      CHECK(max_abs_diff(direct, su3_wigner_matrix(real.basis(), so3_params(a, b, c))) < 1e-10);
      CHECK(unitarity_error(direct) < 1e-12);
      CHECK(direct.entries.imag().cwiseAbs().maxCoeff() < 1e-12);
      const auto& basis = *real.basis();
      CHECK(std::abs(so3_entry(irrep, a, b, c, basis[0], basis[basis.size() - 1]) -
                     direct.entries(0, basis.size() - 1).real()) < 1e-12);
    }
  }
}

TEST_CASE("angular momentum is twice the SU(2) subgroup y-generators") {
  for (IrrepLabel irrep : irreps_up_to(6)) {
    const BosonRealization real(irrep);
    const auto twice = [&](Subgroup s) {
      OperatorMatrix j = real.subgroup_jy(s);
      j.entries *= 2.0;
      return j;
    };
    CHECK(max_abs_diff(real.angular_momentum(Axis::z), twice(Subgroup::s23)) < 1e-12);
    CHECK(max_abs_diff(real.angular_momentum(Axis::y), twice(Subgroup::s12)) < 1e-12);
    OperatorMatrix minus = twice(Subgroup::s13);
    minus.entries *= -1.0;
    CHECK(max_abs_diff(real.angular_momentum(Axis::x), minus) < 1e-12);
    // and they close into so(3): [Lx, Ly] = i Lz
    const OperatorMatrix lx = real.angular_momentum(Axis::x), ly = real.angular_momentum(Axis::y);
    OperatorMatrix ilz = real.angular_momentum(Axis::z);
    ilz.entries *= std::complex<double>(0.0, 1.0);
    CHECK(max_abs_diff(commutator(lx, ly), ilz) < 1e-12);
  }
}

TEST_CASE("D is a homomorphism through factorization") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::Matrix3cd g1 = haar_random_su3(rng), g2 = haar_random_su3(rng);
    const SU3Params p1 = factorize_su3(UnitaryMatrix3::validated(g1));
    const SU3Params p2 = factorize_su3(UnitaryMatrix3::validated(g2));
    const SU3Params p12 = factorize_su3(UnitaryMatrix3::validated(g1 * g2));
    for (IrrepLabel irrep : irreps_up_to(6)) {
      const BasisPtr basis = make_basis(irrep);
      const OperatorMatrix lhs = su3_wigner_matrix(basis, p1) * su3_wigner_matrix(basis, p2);
      CHECK(max_abs_diff(lhs, su3_wigner_matrix(basis, p12)) < 1e-10);
    }
  }
}
