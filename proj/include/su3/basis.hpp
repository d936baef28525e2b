#pragma once

// Gel'fand-Tsetlin / weight basis of an SU(3) irrep (lambda, mu).
//
// A pattern (p, q, r) under the U(3) weight (lambda+mu, mu, 0) satisfies
// lambda+mu >= p >= mu >= q >= 0 and p >= r >= q. The same state is labelled by
// its weight nu = (lambda+2mu-p-q, p+q-r, r) and its SU(2)_23 spin I = (p-q)/2.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "su3/half_int.hpp"

namespace su3 {

struct IrrepLabel {
  int lambda = 0;
  int mu = 0;

  /// Total oscillator quanta lambda + 2 mu.
  constexpr int quanta() const { return lambda + 2 * mu; }
  friend constexpr auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

/// Throws std::invalid_argument for negative labels.
void validate(IrrepLabel irrep);

struct GTPattern {
  int p = 0;
  int q = 0;
  int r = 0;
  friend constexpr auto operator<=>(const GTPattern&, const GTPattern&) = default;
};

struct WeightState {
  std::array<int, 3> nu{};
  HalfInt spin;  // SU(2)_23 spin I

  /// SU(2)_23 projection M = (nu2 - nu3)/2.
  HalfInt projection() const { return HalfInt::from_twice(nu[1] - nu[2]); }
  friend constexpr auto operator<=>(const WeightState&, const WeightState&) = default;
};

bool is_valid_pattern(IrrepLabel irrep, const GTPattern& gt);
bool is_valid_state(IrrepLabel irrep, const WeightState& w);

/// (lambda+1)(mu+1)(lambda+mu+2)/2.
int dimension(IrrepLabel irrep);

/// Canonical order: p descending, then q descending, then r descending.
std::vector<WeightState> enumerate_basis(IrrepLabel irrep);

/// Both conversions throw std::invalid_argument on labels outside the irrep.
WeightState weight_from_gt(IrrepLabel irrep, const GTPattern& gt);
GTPattern gt_from_weight(IrrepLabel irrep, const WeightState& w);

/// Highest weight state |(lambda+mu, mu, 0) mu/2>.
WeightState highest_weight_state(IrrepLabel irrep);

/// Immutable enumerated basis with exact (nu, I) lookup.
class IrrepBasis {
 public:
  explicit IrrepBasis(IrrepLabel irrep);

  IrrepLabel irrep() const { return irrep_; }
  const std::vector<WeightState>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const WeightState& operator[](std::size_t i) const { return states_[i]; }

  std::optional<std::size_t> find(const WeightState& w) const;
  /// Throws std::out_of_range when the state is not in the basis.
  std::size_t index_of(const WeightState& w) const;

 private:
  IrrepLabel irrep_;
  std::vector<WeightState> states_;
  std::map<WeightState, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const IrrepBasis>;
BasisPtr make_basis(IrrepLabel irrep);

}  // namespace su3
