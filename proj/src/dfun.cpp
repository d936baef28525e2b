#include "su3/dfun.hpp"

#include <stdexcept>

#include "su3/angular.hpp"
#include "su3/weyl.hpp"

namespace su3 {

std::array<double, 8> SU3Params::to_array() const {
  return {alpha1, beta1, gamma1, alpha2, beta2, alpha3, beta3, gamma3};
}

SU3Params SU3Params::from_array(std::span<const double> v) {
  if (v.size() != 8)
    throw std::invalid_argument("SU(3) parameters need 8 values, got " +
                                std::to_string(v.size()));
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

namespace {

OperatorMatrix r23_matrix(const BasisPtr& basis, const EulerAngles& e) {
  OperatorMatrix out = OperatorMatrix::zero(basis);
  for (std::size_t c = 0; c < basis->size(); ++c) {
    const WeightState& col = (*basis)[c];
    for (std::size_t r = 0; r < basis->size(); ++r) {
      const WeightState& row = (*basis)[r];
      if (row.nu[0] != col.nu[0] || row.spin != col.spin) continue;
      out.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          wigner_D(col.spin, row.projection(), col.projection(), e.alpha, e.beta, e.gamma);
    }
  }
  return out;
}

// Explicit sum over the intermediate states of
//   R23(left) P132 R23(middle) P123 R23(right).
// `d` evaluates an SU(2)_23 factor: d(which, J, M', M) with which = 0, 1, 2.
class WeylIndexSum {
 public:
  explicit WeylIndexSum(BasisPtr basis)
      : basis_(std::move(basis)),
        p132_(weyl_matrix(basis_, WeylElement::p132)),
        p123_(weyl_matrix(basis_, WeylElement::p123)) {}

  template <class Factor>
  auto entry(const WeightState& row, const WeightState& col, Factor&& d) const {
    using Value = decltype(d(0, HalfInt{}, HalfInt{}, HalfInt{}));
    const IrrepLabel irrep = basis_->irrep();
    Value sum{};
    const int nu1 = col.nu[0];
    const int nu1p = row.nu[0];
    for (int s2 = 0; s2 <= col.nu[1] + col.nu[2]; ++s2) {
      const int s3 = col.nu[1] + col.nu[2] - s2;
      const WeightState w{{nu1, s2, s3}, col.spin};
      if (!is_valid_state(irrep, w)) continue;
      const int t3 = nu1 + s2 - nu1p;
      if (t3 < 0) continue;
      const WeightState x{{nu1p, t3, s3}, row.spin};
      if (!is_valid_state(irrep, x)) continue;
      for (int tj = 0; tj <= irrep.quanta(); ++tj) {
        const HalfInt j = HalfInt::from_twice(tj);
        const WeightState z{{s3, nu1, s2}, j};
        const WeightState y{{s3, nu1p, t3}, j};
        if (!is_valid_state(irrep, z) || !is_valid_state(irrep, y)) continue;
        const double wy = weyl(p132_, x, y);
        const double wz = weyl(p123_, z, w);
        if (wy == 0.0 || wz == 0.0) continue;
        sum += d(0, row.spin, row.projection(), x.projection()) * wy *
               d(1, j, y.projection(), z.projection()) * wz *
               d(2, col.spin, w.projection(), col.projection());
      }
    }
    return sum;
  }

  const BasisPtr& basis() const { return basis_; }

 private:
  static double weyl(const OperatorMatrix& m, const WeightState& r, const WeightState& c) {
    return m.at(r, c).real();
  }

  BasisPtr basis_;
  OperatorMatrix p132_;
  OperatorMatrix p123_;
};

auto su3_factor(const SU3Params& p) {
  const std::array<EulerAngles, 3> e = {p.left(), p.middle(), p.right()};
  return [e](int which, HalfInt j, HalfInt m, HalfInt n) {
    const EulerAngles& a = e[static_cast<std::size_t>(which)];
    return wigner_D(j, m, n, a.alpha, a.beta, a.gamma);
  };
}

auto so3_factor(double alpha, double beta, double gamma) {
  const std::array<double, 3> angle = {2.0 * alpha, 2.0 * beta, 2.0 * gamma};
  return [angle](int which, HalfInt j, HalfInt m, HalfInt n) {
    return wigner_small_d(j, m, n, angle[static_cast<std::size_t>(which)]);
  };
}

}  // namespace

OperatorMatrix su2_subgroup_matrix(const BasisPtr& basis, Subgroup s, const EulerAngles& e) {
  switch (s) {
    case Subgroup::s23: return r23_matrix(basis, e);
    case Subgroup::s12:
      return weyl_matrix(basis, WeylElement::p132) * r23_matrix(basis, e) *
             weyl_matrix(basis, WeylElement::p123);
    case Subgroup::s13: {
      const OperatorMatrix p12 = weyl_matrix(basis, WeylElement::p12);
      return p12 * r23_matrix(basis, e) * p12;
    }
  }
  throw std::logic_error("unreachable Subgroup");
}

OperatorMatrix su2_subgroup_matrix(IrrepLabel irrep, Subgroup s, const EulerAngles& e) {
  return su2_subgroup_matrix(make_basis(irrep), s, e);
}

OperatorMatrix su3_wigner_matrix(const BasisPtr& basis, const SU3Params& params) {
  return r23_matrix(basis, params.left()) * weyl_matrix(basis, WeylElement::p132) *
         r23_matrix(basis, params.middle()) * weyl_matrix(basis, WeylElement::p123) *
         r23_matrix(basis, params.right());
}

OperatorMatrix su3_wigner_matrix(IrrepLabel irrep, const SU3Params& params) {
  return su3_wigner_matrix(make_basis(irrep), params);
}

std::complex<double> su3_wigner_entry(IrrepLabel irrep, const SU3Params& params,
                                      const WeightState& row, const WeightState& col) {
  if (!is_valid_state(irrep, row) || !is_valid_state(irrep, col))
    throw std::invalid_argument("su3_wigner_entry: state not in irrep");
  return WeylIndexSum(make_basis(irrep)).entry(row, col, su3_factor(params));
}

OperatorMatrix so3_matrix(const BasisPtr& basis, double alpha, double beta, double gamma) {
  const WeylIndexSum sum(basis);
  const auto factor = so3_factor(alpha, beta, gamma);
  OperatorMatrix out = OperatorMatrix::zero(basis);
  for (std::size_t r = 0; r < basis->size(); ++r)
    for (std::size_t c = 0; c < basis->size(); ++c)
      out.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          sum.entry((*basis)[r], (*basis)[c], factor);
  return out;
}

OperatorMatrix so3_matrix(IrrepLabel irrep, double alpha, double beta, double gamma) {
  return so3_matrix(make_basis(irrep), alpha, beta, gamma);
}

double so3_entry(IrrepLabel irrep, double alpha, double beta, double gamma,
                 const WeightState& row, const WeightState& col) {
  if (!is_valid_state(irrep, row) || !is_valid_state(irrep, col))
    throw std::invalid_argument("so3_entry: state not in irrep");
  return WeylIndexSum(make_basis(irrep)).entry(row, col, so3_factor(alpha, beta, gamma));
}

OperatorMatrix so3_matrix_factorized(const BasisPtr& basis, double alpha, double beta,
                                     double gamma) {
  return r23_matrix(basis, {0.0, 2.0 * alpha, 0.0}) * weyl_matrix(basis, WeylElement::p132) *
         r23_matrix(basis, {0.0, 2.0 * beta, 0.0}) * weyl_matrix(basis, WeylElement::p123) *
         r23_matrix(basis, {0.0, 2.0 * gamma, 0.0});
}

SU3Params so3_params(double alpha, double beta, double gamma) {
  SU3Params p;
  p.beta1 = 2.0 * alpha;
  p.beta2 = 2.0 * beta;
  p.beta3 = 2.0 * gamma;
  return p;
}

Eigen::Matrix3cd to_defining_matrix(const OperatorMatrix& m) {
  if (m.irrep() != IrrepLabel{1, 0})
    throw std::invalid_argument("to_defining_matrix needs the (1,0) irrep");
  auto unit = [](int k) {
    WeightState w;
    w.nu = {0, 0, 0};
    w.nu[static_cast<std::size_t>(k)] = 1;
    w.spin = HalfInt::from_twice(k == 0 ? 0 : 1);
    return w;
  };
  Eigen::Matrix3cd out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = m.at(unit(r), unit(c));
  return out;
}

}  // namespace su3
