#include "su3/angular.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace su3 {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

const std::vector<cpp_int>& factorial_table() {
  static const std::vector<cpp_int> table = [] {
    std::vector<cpp_int> t(kMaxFactorial + 1);
    t[0] = 1;
    for (int n = 1; n <= kMaxFactorial; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

const std::vector<double>& factorial_table_double() {
  static const std::vector<double> table = [] {
    const auto& exact = factorial_table();
    std::vector<double> t(171);
    for (std::size_t n = 0; n < t.size(); ++n) t[n] = exact[n].convert_to<double>();
    return t;
  }();
  return table;
}

const cpp_int& fact(int n) {
  if (n < 0) throw std::logic_error("negative factorial argument");
  if (n > kMaxFactorial) throw std::out_of_range("factorial argument exceeds table");
  return factorial_table()[static_cast<std::size_t>(n)];
}

double fact_d(int n) {
  if (n < 0 || n > 170) throw std::out_of_range("factorial argument out of double range");
  return factorial_table_double()[static_cast<std::size_t>(n)];
}

// Half of an even twice-value sum; callers guarantee parity.
int half_of(int twice) { return twice / 2; }

void check_parity(HalfInt j, HalfInt m, const char* what) {
  if (j.twice() < 0) throw std::invalid_argument(std::string(what) + ": negative angular momentum");
  if ((j - m).twice() % 2 != 0)
    throw std::invalid_argument(std::string(what) + ": j - m is not an integer");
}

void check_jm(HalfInt j, HalfInt m, const char* what) {
  check_parity(j, m, what);
  if (abs(m) > j) throw std::invalid_argument(std::string(what) + ": |m| > j");
}

// sign(s) * sqrt(s^2 * p), converted to floating point once.
double signed_sqrt_product(const cpp_rational& s, const cpp_rational& p) {
  if (s == 0) return 0.0;
  const double mag = std::sqrt((s * s * p).convert_to<double>());
  return s < 0 ? -mag : mag;
}

// Delta(abc)^2 = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
cpp_rational triangle_coefficient(int ta, int tb, int tc) {
  cpp_rational num = fact(half_of(ta + tb - tc)) * fact(half_of(ta - tb + tc)) *
                     fact(half_of(-ta + tb + tc));
  return num / cpp_rational(fact(half_of(ta + tb + tc) + 1));
}

}  // namespace

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  check_parity(j1, m1, "clebsch_gordan");
  check_parity(j2, m2, "clebsch_gordan");
  check_parity(j, m, "clebsch_gordan");
  if (abs(m1) > j1 || abs(m2) > j2 || abs(m) > j) return 0.0;
  if (m1 + m2 != m || !triangle(j1, j2, j)) return 0.0;

  const int tj1 = j1.twice(), tj2 = j2.twice(), tj = j.twice();
  const int tm1 = m1.twice(), tm2 = m2.twice(), tm = m.twice();

  // Racah's closed form
  const int a = half_of(tj1 + tj2 - tj);
  const int b = half_of(tj1 - tm1);
  const int c = half_of(tj2 + tm2);
  const int d = half_of(tj - tj2 + tm1);
  const int e = half_of(tj - tj1 - tm2);
  const int kmin = std::max({0, -d, -e});
  const int kmax = std::min({a, b, c});

  cpp_rational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    cpp_int den = fact(k) * fact(a - k) * fact(b - k) * fact(c - k) * fact(d + k) * fact(e + k);
    cpp_rational term(cpp_int(1), den);
    if (k % 2 == 0) sum += term; else sum -= term;
  }

  cpp_rational pre = cpp_rational(tj + 1) * triangle_coefficient(tj1, tj2, tj);
  pre *= fact(half_of(tj + tm)) * fact(half_of(tj - tm)) * fact(half_of(tj1 + tm1)) *
         fact(half_of(tj1 - tm1)) * fact(half_of(tj2 + tm2)) * fact(half_of(tj2 - tm2));
  return signed_sqrt_product(sum, pre);
}

double wigner_6j(HalfInt a, HalfInt b, HalfInt c, HalfInt d, HalfInt e, HalfInt f) {
  for (HalfInt x : {a, b, c, d, e, f})
    if (x.twice() < 0) throw std::invalid_argument("wigner_6j: negative argument");
  if (!triangle(a, b, c) || !triangle(a, e, f) || !triangle(d, b, f) || !triangle(d, e, c))
    return 0.0;

  const int ta = a.twice(), tb = b.twice(), tc = c.twice();
  const int td = d.twice(), te = e.twice(), tf = f.twice();
  const int t1 = half_of(ta + tb + tc), t2 = half_of(ta + te + tf);
  const int t3 = half_of(td + tb + tf), t4 = half_of(td + te + tc);
  const int u1 = half_of(ta + tb + td + te), u2 = half_of(ta + tc + td + tf);
  const int u3 = half_of(tb + tc + te + tf);
  const int tmin = std::max({t1, t2, t3, t4});
  const int tmax = std::min({u1, u2, u3});

  cpp_rational sum = 0;
  for (int t = tmin; t <= tmax; ++t) {
    cpp_int den = fact(t - t1) * fact(t - t2) * fact(t - t3) * fact(t - t4) * fact(u1 - t) *
                  fact(u2 - t) * fact(u3 - t);
    cpp_rational term(fact(t + 1), den);
    if (t % 2 == 0) sum += term; else sum -= term;
  }

  const cpp_rational pre = triangle_coefficient(ta, tb, tc) * triangle_coefficient(ta, te, tf) *
                           triangle_coefficient(td, tb, tf) * triangle_coefficient(td, te, tc);
  return signed_sqrt_product(sum, pre);
}

double wigner_small_d(HalfInt j, HalfInt m, HalfInt n, double beta) {
  check_jm(j, m, "wigner_small_d");
  check_jm(j, n, "wigner_small_d");
  const int tj = j.twice(), tm = m.twice(), tn = n.twice();
  const int jpm = half_of(tj + tm), jmm = half_of(tj - tm);
  const int jpn = half_of(tj + tn), jmn = half_of(tj - tn);
  const int mmn = half_of(tm - tn);

  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const double root = std::sqrt(fact_d(jpm) * fact_d(jmm) * fact_d(jpn) * fact_d(jmn));

  // Wigner's sum over k with (j+n-k)!, k!, (j-m-k)!, (m-n+k)! nonnegative
  const int kmin = std::max(0, -mmn);
  const int kmax = std::min(jpn, jmm);
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double den = fact_d(jpn - k) * fact_d(k) * fact_d(jmm - k) * fact_d(mmn + k);
    const int cpow = tj + half_of(tn - tm) - 2 * k;
    const int spow = 2 * k + mmn;
    const double term = std::pow(c, cpow) * std::pow(s, spow) / den;
    sum += ((k + mmn) % 2 == 0) ? term : -term;
  }
  return root * sum;
}

std::complex<double> wigner_D(HalfInt j, HalfInt m, HalfInt n, double alpha, double beta,
                              double gamma) {
  const double d = wigner_small_d(j, m, n, beta);
  return std::polar(d, -(m.value() * alpha + n.value() * gamma));
}

Eigen::MatrixXd wigner_small_d_matrix(HalfInt j, double beta) {
  const int size = j.twice() + 1;
  Eigen::MatrixXd out(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c)
      out(r, c) = wigner_small_d(j, HalfInt::from_twice(j.twice() - 2 * r),
                                 HalfInt::from_twice(j.twice() - 2 * c), beta);
  return out;
}

}  // namespace su3
