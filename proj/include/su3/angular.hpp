#pragma once

// SU(2) recoupling kernel. All coefficients follow the Condon-Shortley phase
// convention; rotations are R(a,b,g) = exp(-i a Jz) exp(-i b Jy) exp(-i g Jz).

#include <complex>

#include <Eigen/Dense>

#include "su3/half_int.hpp"

namespace su3 {

/// Largest factorial argument held in the exact table.
inline constexpr int kMaxFactorial = 300;

/// <j1 m1; j2 m2 | j m>. Zero when m != m1 + m2, any |m| > j, or the triangle fails.
/// Throws std::invalid_argument for negative j or j - m non-integral.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

/// {a b c; d e f}. Zero unless (abc), (aef), (dbf), (dec) all satisfy the triangle rule.
double wigner_6j(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f);

/// Reduced rotation matrix element d^j_{m n}(beta) = <j m| exp(-i beta Jy) |j n>.
double wigner_small_d(HalfInt j, HalfInt m, HalfInt n, double beta);

/// D^j_{m n}(alpha, beta, gamma) = exp(-i m alpha) d^j_{m n}(beta) exp(-i n gamma).
std::complex<double> wigner_D(HalfInt j, HalfInt m, HalfInt n, double alpha, double beta,
                              double gamma);

/// Full (2j+1)x(2j+1) d-matrix, rows and columns ordered m = j, j-1, ..., -j.
Eigen::MatrixXd wigner_small_d_matrix(HalfInt j, double beta);

}  // namespace su3
