#include "su3/factorize.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <string>

#include "su3/errors.hpp"

namespace su3 {

using cplx = std::complex<double>;

namespace {

// Below this modulus a phase is treated as undetermined and gauged to zero.
constexpr double kGaugeThreshold = 1e-14;

Eigen::Matrix3cd embed(const Eigen::Matrix2cd& block, int first) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
  m.block<2, 2>(first, first) = block;
  return m;
}

double deviation2(const Eigen::Matrix2cd& m) {
  const double u = (m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  return std::max(u, std::abs(m.determinant() - 1.0));
}

}  // namespace

Tolerances Tolerances::from_environment() {
  Tolerances t;
  if (const char* env = std::getenv("SU3_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && std::isfinite(v)) t.unitarity = v;
  }
  return t;
}

double su3_deviation(const Eigen::Matrix3cd& m) {
  if (!m.allFinite()) return std::numeric_limits<double>::infinity();
  const double u = (m.adjoint() * m - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff();
  return std::max(u, std::abs(m.determinant() - 1.0));
}

UnitaryMatrix3 UnitaryMatrix3::validated(const Eigen::Matrix3cd& m, double tol) {
  const double dev = su3_deviation(m);
  if (!(dev < tol))
    throw ValidationError("matrix is not in SU(3): deviation " + std::to_string(dev) +
                          " exceeds tolerance " + std::to_string(tol));
  return UnitaryMatrix3(m);
}

Eigen::Matrix2cd su2_from_euler(const EulerAngles& e) {
  const double c = std::cos(0.5 * e.beta), s = std::sin(0.5 * e.beta);
  const double sum = 0.5 * (e.alpha + e.gamma), diff = 0.5 * (e.alpha - e.gamma);
  Eigen::Matrix2cd m;
  m << std::polar(c, -sum), -std::polar(s, -diff),
       std::polar(s, diff), std::polar(c, sum);
  return m;
}

EulerAngles euler_from_su2(const Eigen::Matrix2cd& block, double tol) {
  if (!block.allFinite() || !(deviation2(block) < tol))
    throw ValidationError("2x2 block is not in SU(2)");
  const cplx a = block(0, 0);
  const cplx minus_b = -block(0, 1);  // e^{-i(alpha-gamma)/2} sin(beta/2)
  EulerAngles e;
  e.beta = 2.0 * std::atan2(std::abs(minus_b), std::abs(a));
  if (std::abs(minus_b) < kGaugeThreshold) {
    e.alpha = -2.0 * std::arg(a);
  } else if (std::abs(a) < kGaugeThreshold) {
    e.alpha = -2.0 * std::arg(minus_b);
  } else {
    const double pa = std::arg(a), pb = std::arg(minus_b);
    e.alpha = -pa - pb;
    e.gamma = -pa + pb;
  }
  // arg() returns (-pi, pi]; map an exact -2pi onto the representative 2pi
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (e.alpha <= -two_pi) e.alpha += 2.0 * two_pi;
  if (e.gamma <= -two_pi) e.gamma += 2.0 * two_pi;
  return e;
}

SU3Params factorize_su3(const UnitaryMatrix3& gm) {
  const Eigen::Matrix3cd& g = gm.matrix();
  SU3Params p;

  // first column (x, y, z): x fixes the middle R12 factor
  const cplx x = g(0, 0);
  const Eigen::Vector2cd lower(g(1, 0), g(2, 0));
  const double rho = lower.norm();
  p.beta2 = 2.0 * std::atan2(rho, std::abs(x));
  p.alpha2 = std::abs(x) < kGaugeThreshold ? 0.0 : -std::arg(x);

  // left R23 rotates (sqrt(1-|x|^2), 0) onto (y, z); identity when |x| = 1
  Eigen::Matrix3cd left = Eigen::Matrix3cd::Identity();
  if (rho > kGaugeThreshold) {
    const cplx yy = lower[0] / rho, zz = lower[1] / rho;
    Eigen::Matrix2cd block;
    block << yy, -std::conj(zz), zz, std::conj(yy);
    const EulerAngles e = euler_from_su2(block, 1e-8);
    p.alpha1 = e.alpha;
    p.beta1 = e.beta;
    p.gamma1 = e.gamma;
    left = embed(su2_from_euler(e), 1);
  }

  const Eigen::Matrix3cd middle = embed(su2_from_euler(p.middle()), 0);
  const Eigen::Matrix3cd rest = middle.adjoint() * left.adjoint() * g;
  // rest = diag(1, R23(right)) up to rounding; re-unitarize the block by its polar factor
  Eigen::Matrix2cd block = rest.block<2, 2>(1, 1);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
  block = svd.matrixU() * svd.matrixV().adjoint();
  block /= std::sqrt(block.determinant());
  const EulerAngles e3 = euler_from_su2(block, 1e-8);
  p.alpha3 = e3.alpha;
  p.beta3 = e3.beta;
  p.gamma3 = e3.gamma;
  return p;
}

UnitaryMatrix3 compose_defining(const SU3Params& p) {
  return UnitaryMatrix3(embed(su2_from_euler(p.left()), 1) *
                        embed(su2_from_euler(p.middle()), 0) *
                        embed(su2_from_euler(p.right()), 1));
}

Eigen::Matrix3cd haar_random_su3(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix3cd z;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) z(r, c) = cplx(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::Matrix3cd> qr(z);
  Eigen::Matrix3cd q = qr.householderQ();
  const Eigen::Matrix3cd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 3; ++k) {
    const cplx d = rmat(k, k);
    q.col(k) *= d / std::abs(d);
  }
  const cplx det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / 3.0);
  return q;
}

}  // namespace su3
