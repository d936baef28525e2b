#include "su3/oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "su3/angular.hpp"
#include "su3/linalg.hpp"

namespace su3 {

int FockState::quanta() const {
  int s = 0;
  for (const auto& p : n) s += p[0] + p[1];
  return s;
}

int FockState::twice_projection() const {
  int s = 0;
  for (const auto& p : n) s += p[0] - p[1];
  return s;
}

FockSpace::FockSpace(int quanta, std::optional<int> b_weight) : quanta_(quanta) {
  if (quanta < 0) throw std::invalid_argument("FockSpace: negative number of quanta");
  FockState s;
  // all compositions of `quanta` into six occupation numbers, lexicographic
  for (int a = quanta; a >= 0; --a)
    for (int b = quanta - a; b >= 0; --b)
      for (int c = quanta - a - b; c >= 0; --c)
        for (int d = quanta - a - b - c; d >= 0; --d)
          for (int e = quanta - a - b - c - d; e >= 0; --e) {
            s.n = {{{a, b}, {c, d}, {e, quanta - a - b - c - d - e}}};
            if (b_weight && s.twice_projection() != *b_weight) continue;
            index_.emplace(s, states_.size());
            states_.push_back(s);
          }
}

std::optional<std::size_t> FockSpace::find(const FockState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_index(int k, int max, const char* what) {
  if (k < 1 || k > max)
    throw std::out_of_range(std::string(what) + " index " + std::to_string(k) + " out of range");
}

}  // namespace

SparseOperator FockSpace::c_operator(int i, int j) const {
  check_index(i, 3, "C_ij");
  check_index(j, 3, "C_ij");
  const int pi = i - 1, pj = j - 1;
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t col = 0; col < states_.size(); ++col) {
    for (int m = 0; m < 2; ++m) {
      FockState t = states_[col];
      if (t.n[pj][m] == 0) continue;
      double amp = std::sqrt(static_cast<double>(t.n[pj][m]));
      --t.n[pj][m];
      amp *= std::sqrt(static_cast<double>(t.n[pi][m] + 1));
      ++t.n[pi][m];
      if (auto row = find(t))
        triplets.emplace_back(static_cast<int>(*row), static_cast<int>(col), amp);
    }
  }
  SparseOperator op(static_cast<int>(size()), static_cast<int>(size()));
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

SparseOperator FockSpace::b_operator(int m, int n) const {
  check_index(m, 2, "B_mn");
  check_index(n, 2, "B_mn");
  const int pm = m - 1, pn = n - 1;
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t col = 0; col < states_.size(); ++col) {
    for (int i = 0; i < 3; ++i) {
      FockState t = states_[col];
      if (t.n[i][pn] == 0) continue;
      double amp = std::sqrt(static_cast<double>(t.n[i][pn]));
      --t.n[i][pn];
      amp *= std::sqrt(static_cast<double>(t.n[i][pm] + 1));
      ++t.n[i][pm];
      if (auto row = find(t))
        triplets.emplace_back(static_cast<int>(*row), static_cast<int>(col), amp);
    }
  }
  SparseOperator op(static_cast<int>(size()), static_cast<int>(size()));
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

SparseOperator FockSpace::permutation(WeylElement w) const {
  const auto img = image(w);
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t col = 0; col < states_.size(); ++col) {
    FockState t;
    for (int k = 0; k < 3; ++k) t.n[img[k]] = states_[col].n[k];
    auto row = find(t);
    if (!row) throw std::logic_error("permutation left the Fock space");
    triplets.emplace_back(static_cast<int>(*row), static_cast<int>(col), 1.0);
  }
  SparseOperator op(static_cast<int>(size()), static_cast<int>(size()));
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

Eigen::VectorXd coupled_state_vector(const FockSpace& space, IrrepLabel irrep,
                                     const WeightState& w) {
  if (!is_valid_state(irrep, w)) throw std::invalid_argument("state is not in the irrep basis");
  if (space.quanta() != irrep.quanta())
    throw std::invalid_argument("Fock space has the wrong number of quanta");

  const auto [n1, n2, n3] = w.nu;
  const HalfInt s1 = HalfInt::from_twice(n1), s2 = HalfInt::from_twice(n2),
                s3 = HalfInt::from_twice(n3);
  const HalfInt total = HalfInt::from_twice(irrep.lambda);

  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.size()));
  for (int t2 = -n2; t2 <= n2; t2 += 2) {
    for (int t3 = -n3; t3 <= n3; t3 += 2) {
      const int tn = t2 + t3;
      if (std::abs(tn) > w.spin.twice()) continue;
      const int t1 = irrep.lambda - tn;
      if (std::abs(t1) > n1 || (n1 - t1) % 2 != 0) continue;
      const HalfInt m1 = HalfInt::from_twice(t1), m2 = HalfInt::from_twice(t2),
                    m3 = HalfInt::from_twice(t3), big_n = HalfInt::from_twice(tn);
      const double inner = clebsch_gordan(s2, m2, s3, m3, w.spin, big_n);
      if (inner == 0.0) continue;
      const double outer = clebsch_gordan(s1, m1, w.spin, big_n, total, total);
      if (outer == 0.0) continue;
      FockState f;
      f.n = {{{(n1 + t1) / 2, (n1 - t1) / 2}, {(n2 + t2) / 2, (n2 - t2) / 2},
              {(n3 + t3) / 2, (n3 - t3) / 2}}};
      auto idx = space.find(f);
      if (!idx) throw std::out_of_range("Fock space lacks a component of the coupled state");
      v[static_cast<Eigen::Index>(*idx)] += inner * outer;
    }
  }
  return v;
}

Eigen::VectorXd highest_weight_vector(const FockSpace& space, IrrepLabel irrep) {
  validate(irrep);
  if (space.quanta() != irrep.quanta())
    throw std::invalid_argument("Fock space has the wrong number of quanta");
  const int top = irrep.lambda + irrep.mu;
  auto fact = [](int n) { return std::tgamma(n + 1.0); };
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.size()));
  // binomial expansion of the determinant power; (a+)^n |0> = sqrt(n!) |n>
  for (int k = 0; k <= irrep.mu; ++k) {
    FockState f;
    f.n = {{{top - k, k}, {k, irrep.mu - k}, {0, 0}}};
    auto idx = space.find(f);
    if (!idx) throw std::out_of_range("Fock space lacks a highest weight component");
    const double binom = fact(irrep.mu) / (fact(k) * fact(irrep.mu - k));
    const double amp = binom * std::sqrt(fact(top - k) * fact(k) * fact(k) * fact(irrep.mu - k));
    v[static_cast<Eigen::Index>(*idx)] += (k % 2 == 0) ? amp : -amp;
  }
  return v / v.norm();
}

BosonRealization::BosonRealization(IrrepLabel irrep)
    : basis_(make_basis(irrep)), fock_(irrep.quanta(), irrep.lambda) {
  vectors_.resize(static_cast<Eigen::Index>(fock_.size()),
                  static_cast<Eigen::Index>(basis_->size()));
  for (std::size_t k = 0; k < basis_->size(); ++k)
    vectors_.col(static_cast<Eigen::Index>(k)) = coupled_state_vector(fock_, irrep, (*basis_)[k]);
}

OperatorMatrix BosonRealization::compress(const SparseOperator& op) const {
  const Eigen::MatrixXd image = op * vectors_;
  const Eigen::MatrixXd m = vectors_.transpose() * image;
  return {basis_, m.cast<std::complex<double>>()};
}

OperatorMatrix BosonRealization::generator(Algebra algebra, int i, int j) const {
  if (algebra == Algebra::u3) return compress(fock_.c_operator(i, j));
  if (i == j) return compress(fock_.b_operator(i, j));
  // off-diagonal B_mn changes the B-weight, so work on the full sigma space
  check_index(i, 2, "B_mn");
  check_index(j, 2, "B_mn");
  const FockSpace full(fock_.quanta());
  Eigen::MatrixXd embedded = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(full.size()),
                                                   vectors_.cols());
  for (std::size_t k = 0; k < fock_.size(); ++k)
    embedded.row(static_cast<Eigen::Index>(*full.find(fock_.states()[k]))) =
        vectors_.row(static_cast<Eigen::Index>(k));
  const Eigen::MatrixXd m = embedded.transpose() * (full.b_operator(i, j) * embedded);
  return {basis_, m.cast<std::complex<double>>()};
}

OperatorMatrix BosonRealization::permutation(WeylElement w) const {
  return compress(fock_.permutation(w));
}

OperatorMatrix BosonRealization::subgroup_jz(Subgroup s) const {
  const auto [i, j] = subgroup_indices(s);
  const SparseOperator h = 0.5 * (fock_.c_operator(i, i) - fock_.c_operator(j, j));
  return compress(h);
}

OperatorMatrix BosonRealization::subgroup_jy(Subgroup s) const {
  const auto [i, j] = subgroup_indices(s);
  const OperatorMatrix d = compress(fock_.c_operator(i, j) - fock_.c_operator(j, i));
  return {basis_, d.entries * std::complex<double>(0.0, -0.5)};
}

namespace {

OperatorMatrix euler_product(const OperatorMatrix& jz, const OperatorMatrix& jy, double a,
                             double b, double g) {
  return {jz.basis,
          unitary_exp(jz.entries, a) * unitary_exp(jy.entries, b) * unitary_exp(jz.entries, g)};
}

}  // namespace

OperatorMatrix BosonRealization::subgroup_rotation(Subgroup s, const EulerAngles& e) const {
  return euler_product(subgroup_jz(s), subgroup_jy(s), e.alpha, e.beta, e.gamma);
}

OperatorMatrix BosonRealization::angular_momentum(Axis axis) const {
  int i = 2, j = 3;
  if (axis == Axis::x) { i = 3; j = 1; }
  if (axis == Axis::y) { i = 1; j = 2; }
  const OperatorMatrix d = compress(fock_.c_operator(i, j) - fock_.c_operator(j, i));
  return {basis_, d.entries * std::complex<double>(0.0, -1.0)};
}

OperatorMatrix BosonRealization::so3_rotation(double alpha, double beta, double gamma) const {
  return euler_product(angular_momentum(Axis::z), angular_momentum(Axis::y), alpha, beta, gamma);
}

OperatorMatrix generator_matrix(IrrepLabel irrep, Algebra algebra, int i, int j) {
  return BosonRealization(irrep).generator(algebra, i, j);
}

OperatorMatrix permutation_matrix_oracle(IrrepLabel irrep, WeylElement w) {
  return BosonRealization(irrep).permutation(w);
}

OperatorMatrix subgroup_rotation_oracle(IrrepLabel irrep, Subgroup s, const EulerAngles& e) {
  return BosonRealization(irrep).subgroup_rotation(s, e);
}

}  // namespace su3
