#include "su3/basis.hpp"

#include <stdexcept>
#include <string>

namespace su3 {

void validate(IrrepLabel irrep) {
  if (irrep.lambda < 0 || irrep.mu < 0)
    throw std::invalid_argument("irrep labels must be nonnegative, got (" +
                                std::to_string(irrep.lambda) + "," + std::to_string(irrep.mu) +
                                ")");
}

bool is_valid_pattern(IrrepLabel irrep, const GTPattern& gt) {
  const int top = irrep.lambda + irrep.mu;
  return top >= gt.p && gt.p >= irrep.mu && irrep.mu >= gt.q && gt.q >= 0 && gt.p >= gt.r &&
         gt.r >= gt.q;
}

namespace {

std::optional<GTPattern> recover_pattern(IrrepLabel irrep, const WeightState& w) {
  const int sum = w.nu[0] + w.nu[1] + w.nu[2];
  if (sum != irrep.quanta()) return std::nullopt;
  // 2p = nu2 + nu3 + 2I, 2q = nu2 + nu3 - 2I
  const int twice_p = w.nu[1] + w.nu[2] + w.spin.twice();
  const int twice_q = w.nu[1] + w.nu[2] - w.spin.twice();
  if (twice_p % 2 != 0 || twice_q % 2 != 0) return std::nullopt;
  GTPattern gt{twice_p / 2, twice_q / 2, w.nu[2]};
  if (!is_valid_pattern(irrep, gt)) return std::nullopt;
  return gt;
}

}  // namespace

bool is_valid_state(IrrepLabel irrep, const WeightState& w) {
  if (irrep.lambda < 0 || irrep.mu < 0) return false;
  for (int n : w.nu)
    if (n < 0) return false;
  return recover_pattern(irrep, w).has_value();
}

int dimension(IrrepLabel irrep) {
  validate(irrep);
  return (irrep.lambda + 1) * (irrep.mu + 1) * (irrep.lambda + irrep.mu + 2) / 2;
}

WeightState weight_from_gt(IrrepLabel irrep, const GTPattern& gt) {
  validate(irrep);
  if (!is_valid_pattern(irrep, gt))
    throw std::invalid_argument("GT pattern violates betweenness");
  WeightState w;
  w.nu = {irrep.quanta() - gt.p - gt.q, gt.p + gt.q - gt.r, gt.r};
  w.spin = HalfInt::from_twice(gt.p - gt.q);
  return w;
}

GTPattern gt_from_weight(IrrepLabel irrep, const WeightState& w) {
  validate(irrep);
  for (int n : w.nu)
    if (n < 0) throw std::invalid_argument("weight components must be nonnegative");
  auto gt = recover_pattern(irrep, w);
  if (!gt) throw std::invalid_argument("weight state does not label a GT pattern of this irrep");
  return *gt;
}

std::vector<WeightState> enumerate_basis(IrrepLabel irrep) {
  validate(irrep);
  std::vector<WeightState> out;
  out.reserve(static_cast<std::size_t>(dimension(irrep)));
  for (int p = irrep.lambda + irrep.mu; p >= irrep.mu; --p)
    for (int q = irrep.mu; q >= 0; --q)
      for (int r = p; r >= q; --r) out.push_back(weight_from_gt(irrep, {p, q, r}));
  return out;
}

WeightState highest_weight_state(IrrepLabel irrep) {
  return weight_from_gt(irrep, {irrep.mu, 0, 0});
}

IrrepBasis::IrrepBasis(IrrepLabel irrep) : irrep_(irrep), states_(enumerate_basis(irrep)) {
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::optional<std::size_t> IrrepBasis::find(const WeightState& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IrrepBasis::index_of(const WeightState& w) const {
  auto i = find(w);
  if (!i) throw std::out_of_range("state not in irrep basis");
  return *i;
}

BasisPtr make_basis(IrrepLabel irrep) { return std::make_shared<const IrrepBasis>(irrep); }

}  // namespace su3
