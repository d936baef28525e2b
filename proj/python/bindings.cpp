#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <random>

#include "su3/angular.hpp"
#include "su3/dfun.hpp"
#include "su3/errors.hpp"
#include "su3/factorize.hpp"
#include "su3/verify.hpp"
#include "su3/weyl.hpp"

namespace py = pybind11;
using namespace su3;

namespace {

// Angular momenta arrive as Python floats; they must be multiples of 1/2.
HalfInt half(double x) {
  const double t = 2.0 * x;
  if (!std::isfinite(t) || std::abs(t - std::round(t)) > 1e-9)
    throw std::invalid_argument("expected an integer or half-integer, got " + std::to_string(x));
  return HalfInt::from_twice(static_cast<int>(std::lround(t)));
}

Subgroup parse_subgroup(const std::string& s) {
  if (s == "12") return Subgroup::s12;
  if (s == "13") return Subgroup::s13;
  if (s == "23") return Subgroup::s23;
  throw std::invalid_argument("subgroup must be '12', '13' or '23'");
}

py::dict params_dict(const SU3Params& p) {
  py::dict d;
  d["alpha1"] = p.alpha1;
  d["beta1"] = p.beta1;
  d["gamma1"] = p.gamma1;
  d["alpha2"] = p.alpha2;
  d["beta2"] = p.beta2;
  d["alpha3"] = p.alpha3;
  d["beta3"] = p.beta3;
  d["gamma3"] = p.gamma3;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "SU(3) irreps in the Gel'fand-Tsetlin basis: Weyl matrices and Wigner functions.";
  m.attr("__version__") = SU3_VERSION;

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("dimension", [](int lam, int mu) { return dimension({lam, mu}); }, py::arg("lam"),
        py::arg("mu"));

  m.def(
      "basis",
      [](int lam, int mu) {
        const IrrepLabel irrep{lam, mu};
        py::list out;
        for (const auto& w : enumerate_basis(irrep)) {
          const GTPattern gt = gt_from_weight(irrep, w);
          py::dict d;
          d["p"] = gt.p;
          d["q"] = gt.q;
          d["r"] = gt.r;
          d["nu"] = py::make_tuple(w.nu[0], w.nu[1], w.nu[2]);
          d["twoI"] = w.spin.twice();
          d["twoM"] = w.projection().twice();
          out.append(d);
        }
        return out;
      },
      py::arg("lam"), py::arg("mu"), "Ordered basis records {p, q, r, nu, twoI, twoM}.");

  m.def(
      "weyl",
      [](int lam, int mu, const std::string& element) {
        return weyl_matrix(IrrepLabel{lam, mu}, parse_weyl_element(element)).entries;
      },
      py::arg("lam"), py::arg("mu"), py::arg("element"));

  m.def(
      "dfun",
      [](int lam, int mu, const std::vector<double>& params) {
        return su3_wigner_matrix(IrrepLabel{lam, mu}, SU3Params::from_array(params)).entries;
      },
      py::arg("lam"), py::arg("mu"), py::arg("params"),
      "D-matrix of R23(a1,b1,g1) R12(a2,b2,a2) R23(a3,b3,g3).");

  m.def(
      "so3",
      [](int lam, int mu, double a, double b, double g) {
        return so3_matrix(IrrepLabel{lam, mu}, a, b, g).entries;
      },
      py::arg("lam"), py::arg("mu"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

  m.def(
      "su2_subgroup",
      [](int lam, int mu, const std::string& subgroup, double a, double b, double g) {
        return su2_subgroup_matrix(IrrepLabel{lam, mu}, parse_subgroup(subgroup), {a, b, g})
            .entries;
      },
      py::arg("lam"), py::arg("mu"), py::arg("subgroup"), py::arg("alpha"), py::arg("beta"),
      py::arg("gamma"));

  m.def(
      "factorize",
      [](const Eigen::Matrix3cd& g) {
        const Tolerances tol = Tolerances::from_environment();
        return params_dict(factorize_su3(UnitaryMatrix3::validated(g, tol.unitarity)));
      },
      py::arg("matrix"));

  m.def(
      "compose",
      [](const std::vector<double>& params) {
        return Eigen::Matrix3cd(compose_defining(SU3Params::from_array(params)).matrix());
      },
      py::arg("params"));

  m.def(
      "haar_random_su3",
      [](std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return haar_random_su3(rng);
      },
      py::arg("seed"));

  m.def(
      "clebsch_gordan",
      [](double j1, double m1, double j2, double m2, double j, double mm) {
        return clebsch_gordan(half(j1), half(m1), half(j2), half(m2), half(j), half(mm));
      },
      py::arg("j1"), py::arg("m1"), py::arg("j2"), py::arg("m2"), py::arg("j"), py::arg("m"));

  m.def(
      "wigner_6j",
      [](double a, double b, double c, double d, double e, double f) {
        return wigner_6j(half(a), half(b), half(c), half(d), half(e), half(f));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("e"), py::arg("f"));

  m.def(
      "wigner_small_d",
      [](double j, double mm, double n, double beta) {
        return wigner_small_d(half(j), half(mm), half(n), beta);
      },
      py::arg("j"), py::arg("m"), py::arg("n"), py::arg("beta"));

  m.def(
      "wigner_D",
      [](double j, double mm, double n, double a, double b, double g) {
        return wigner_D(half(j), half(mm), half(n), a, b, g);
      },
      py::arg("j"), py::arg("m"), py::arg("n"), py::arg("alpha"), py::arg("beta"),
      py::arg("gamma"));

  m.def(
      "verify",
      [](int max_quanta, std::uint64_t seed, int samples) {
        std::vector<CheckResult> results;
        {
          py::gil_scoped_release release;
          results = run_verification({max_quanta, seed, samples});
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["name"] = r.name;
          d["max_error"] = r.max_error;
          d["tolerance"] = r.tolerance;
          d["passed"] = r.passed;
          out.append(d);
        }
        return out;
      },
      py::arg("max_quanta") = 6, py::arg("seed") = 1, py::arg("samples") = 10);
}
