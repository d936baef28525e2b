#include "su3/linalg.hpp"

#include <complex>

namespace su3 {

Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& hermitian, double t) {
  if (hermitian.size() == 0 || t == 0.0)
    return Eigen::MatrixXcd::Identity(hermitian.rows(), hermitian.cols());
  const Eigen::MatrixXcd sym = 0.5 * (hermitian + hermitian.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(sym);
  const Eigen::VectorXd& w = eig.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases[k] = std::polar(1.0, -t * w[k]);
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double unitarity_error(const Eigen::MatrixXcd& u) {
  return max_abs(u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols()));
}

}  // namespace su3
