#include "su3/weyl.hpp"

#include <cmath>

#include "su3/angular.hpp"
#include "su3/errors.hpp"

namespace su3 {
namespace {

struct ClosedForm {
  std::array<int, 6> sixj;  // twice-values
  int twice_exponent;
};

ClosedForm closed_form(IrrepLabel irrep, WeylElement w, const WeightState& row,
                       const WeightState& col) {
  const auto [n1, n2, n3] = col.nu;
  const int ti = col.spin.twice(), tip = row.spin.twice();
  const int lam = irrep.lambda, mu = irrep.mu;
  switch (w) {
    case WeylElement::p12:
      return {{n1, n3, tip, n2, lam, ti}, n3 - ti - tip + 2 * mu - lam};
    case WeylElement::p123:
      return {{n1, n2, tip, n3, lam, ti}, n1 + n2 - tip + 2 * lam};
    case WeylElement::p132:
      return {{n1, n3, tip, n2, lam, ti}, n1 + ti + 2 * mu + lam};
    default:
      throw std::invalid_argument("no closed form for Weyl element " + to_string(w));
  }
}

}  // namespace

double weyl_closed_form_element(IrrepLabel irrep, WeylElement w, const WeightState& row,
                                const WeightState& col) {
  if (w == WeylElement::identity) return row == col ? 1.0 : 0.0;
  if (row.nu != permute_weight(w, col.nu)) return 0.0;
  const ClosedForm cf = closed_form(irrep, w, row, col);
  const auto& s = cf.sixj;
  const double six = wigner_6j(HalfInt::from_twice(s[0]), HalfInt::from_twice(s[1]),
                               HalfInt::from_twice(s[2]), HalfInt::from_twice(s[3]),
                               HalfInt::from_twice(s[4]), HalfInt::from_twice(s[5]));
  if (six == 0.0) return 0.0;
  const HalfInt exponent = HalfInt::from_twice(cf.twice_exponent);
  if (!exponent.is_integer())
    throw ConsistencyError("half-integral phase exponent with nonzero 6-j in P" + to_string(w));
  const double weight = std::sqrt(static_cast<double>((col.spin.twice() + 1) *
                                                      (row.spin.twice() + 1)));
  return sign_power(exponent) * weight * six;
}

OperatorMatrix weyl_matrix(const BasisPtr& basis, WeylElement w) {
  switch (w) {
    case WeylElement::identity: return OperatorMatrix::identity(basis);
    case WeylElement::p13:
      return weyl_matrix(basis, WeylElement::p12) * weyl_matrix(basis, WeylElement::p132);
    case WeylElement::p23:
      return weyl_matrix(basis, WeylElement::p12) * weyl_matrix(basis, WeylElement::p123);
    default: break;
  }
  const IrrepLabel irrep = basis->irrep();
  OperatorMatrix out = OperatorMatrix::zero(basis);
  for (std::size_t c = 0; c < basis->size(); ++c) {
    const WeightState& col = (*basis)[c];
    const auto target = permute_weight(w, col.nu);
    for (std::size_t r = 0; r < basis->size(); ++r) {
      const WeightState& row = (*basis)[r];
      if (row.nu != target) continue;
      out.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          weyl_closed_form_element(irrep, w, row, col);
    }
  }
  return out;
}

OperatorMatrix weyl_matrix(IrrepLabel irrep, WeylElement w) {
  return weyl_matrix(make_basis(irrep), w);
}

}  // namespace su3
