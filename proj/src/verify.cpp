#include "su3/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "su3/factorize.hpp"
#include "su3/oracle.hpp"
#include "su3/weyl.hpp"

namespace su3 {

SU3Params random_params(std::mt19937_64& rng) {
  constexpr double pi = std::numbers::pi;
  std::uniform_real_distribution<double> phase(-2.0 * pi, 2.0 * pi);
  std::uniform_real_distribution<double> polar(0.0, pi);
  SU3Params p;
  p.alpha1 = phase(rng);
  p.beta1 = polar(rng);
  p.gamma1 = phase(rng);
  p.alpha2 = phase(rng);
  p.beta2 = polar(rng);
  p.alpha3 = phase(rng);
  p.beta3 = polar(rng);
  p.gamma3 = phase(rng);
  return p;
}

namespace {

std::string label(const char* what, IrrepLabel irrep) {
  return std::string(what) + " (" + std::to_string(irrep.lambda) + "," +
         std::to_string(irrep.mu) + ")";
}

CheckResult check(std::string name, double err, double tol) {
  return {std::move(name), err, tol, err < tol};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(options.seed);

  for (int sigma = 0; sigma <= options.max_quanta; ++sigma) {
    for (int mu = 0; 2 * mu <= sigma; ++mu) {
      const IrrepLabel irrep{sigma - 2 * mu, mu};
      const BosonRealization oracle(irrep);
      const BasisPtr& basis = oracle.basis();

      double weyl_err = 0.0;
      for (WeylElement w : kWeylElements)
        weyl_err = std::max(weyl_err, max_abs_diff(weyl_matrix(basis, w), oracle.permutation(w)));
      out.push_back(check(label("weyl closed form vs oracle", irrep), weyl_err, 1e-12));

      double d_err = 0.0, so3_err = 0.0;
      for (int k = 0; k < options.samples; ++k) {
        const SU3Params p = random_params(rng);
        const OperatorMatrix expected = oracle.subgroup_rotation(Subgroup::s23, p.left()) *
                                        oracle.subgroup_rotation(Subgroup::s12, p.middle()) *
                                        oracle.subgroup_rotation(Subgroup::s23, p.right());
        d_err = std::max(d_err, max_abs_diff(su3_wigner_matrix(basis, p), expected));
        so3_err = std::max(so3_err, max_abs_diff(so3_matrix(basis, p.alpha1, p.beta2, p.gamma3),
                                                 oracle.so3_rotation(p.alpha1, p.beta2,
                                                                     p.gamma3)));
      }
      out.push_back(check(label("su3 wigner matrix vs oracle", irrep), d_err, 1e-10));
      out.push_back(check(label("so3 matrix vs oracle", irrep), so3_err, 1e-10));
    }
  }

  double round_trip = 0.0;
  std::vector<Eigen::Matrix3cd> samples;
  for (int k = 0; k < std::max(1, 10 * options.samples); ++k) {
    samples.push_back(haar_random_su3(rng));
    const auto g = UnitaryMatrix3::validated(samples.back());
    round_trip = std::max(
        round_trip,
        (g.matrix() - compose_defining(factorize_su3(g)).matrix()).cwiseAbs().maxCoeff());
  }
  out.push_back(check("factorization round trip", round_trip, 1e-11));

  for (int sigma = 0; sigma <= options.max_quanta; ++sigma) {
    for (int mu = 0; 2 * mu <= sigma; ++mu) {
      const IrrepLabel irrep{sigma - 2 * mu, mu};
      if (irrep.lambda + irrep.mu > 4) continue;
      const BasisPtr basis = make_basis(irrep);
      double err = 0.0;
      for (std::size_t k = 0; k + 1 < samples.size(); k += 2) {
        const auto g1 = UnitaryMatrix3::validated(samples[k]);
        const auto g2 = UnitaryMatrix3::validated(samples[k + 1]);
        const auto g12 = UnitaryMatrix3::validated(samples[k] * samples[k + 1]);
        const OperatorMatrix lhs = su3_wigner_matrix(basis, factorize_su3(g1)) *
                                   su3_wigner_matrix(basis, factorize_su3(g2));
        err = std::max(err, max_abs_diff(lhs, su3_wigner_matrix(basis, factorize_su3(g12))));
      }
      out.push_back(check(label("homomorphism", irrep), err, 1e-10));
    }
  }
  return out;
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results) {
  std::size_t failed = 0;
  char buf[64];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "max_err=%.3e tol=%.0e", r.max_error, r.tolerance);
    os << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << buf << '\n';
    if (!r.passed) ++failed;
  }
  os << (results.size() - failed) << "/" << results.size() << " checks passed\n";
}

}  // namespace su3
