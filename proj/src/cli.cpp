#include "su3/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "su3/dfun.hpp"
#include "su3/errors.hpp"
#include "su3/factorize.hpp"
#include "su3/json_io.hpp"
#include "su3/verify.hpp"
#include "su3/weyl.hpp"

namespace su3 {
namespace {

// Signals a bad command line detected after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + item + "' is not a number");
    }
    if (used != item.size() || !std::isfinite(v))
      throw UsageError(std::string(flag) + ": '" + item + "' is not a finite number");
    values.push_back(v);
  }
  if (values.size() != expected)
    throw UsageError(std::string(flag) + " expects " + std::to_string(expected) +
                     " comma-separated values, got " + std::to_string(values.size()));
  return values;
}

struct IrrepArgs {
  int lambda = 0;
  int mu = 0;
  IrrepLabel label() const { return {lambda, mu}; }
};

void add_irrep(CLI::App* cmd, IrrepArgs& a) {
  cmd->add_option("--lambda", a.lambda, "first Dynkin label")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--mu", a.mu, "second Dynkin label")->required()->check(CLI::NonNegativeNumber);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SU(3) irreps, Weyl matrices and Wigner functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(SU3_VERSION));

  IrrepArgs irrep;
  bool as_json = false;
  std::string element, params_text, angles_text, matrix_file;
  int max_quanta = 6, samples = 10;
  std::uint64_t seed = 1;

  auto* dim = app.add_subcommand("dim", "print the irrep dimension");
  add_irrep(dim, irrep);

  auto* basis = app.add_subcommand("basis", "list the Gel'fand-Tsetlin basis");
  add_irrep(basis, irrep);
  basis->add_flag("--json", as_json, "emit JSON records");

  auto* weyl = app.add_subcommand("weyl", "Weyl group element matrix");
  add_irrep(weyl, irrep);
  weyl->add_option("--element", element, "e, 12, 13, 23, 123 or 132")->required();

  auto* dfun = app.add_subcommand("dfun", "SU(3) Wigner D-matrix");
  add_irrep(dfun, irrep);
  dfun->add_option("--params", params_text, "a1,b1,g1,a2,b2,a3,b3,g3 in radians")->required();

  auto* so3 = app.add_subcommand("so3", "SO(3) subgroup rotation matrix");
  add_irrep(so3, irrep);
  so3->add_option("--angles", angles_text, "alpha,beta,gamma in radians")->required();

  auto* factorize = app.add_subcommand("factorize", "factorize a 3x3 SU(3) matrix");
  factorize->add_option("--matrix", matrix_file, "JSON file with {\"rows\": ...}")->required();

  auto* verify = app.add_subcommand("verify", "run the oracle-equivalence suites");
  verify->add_option("--max-quanta", max_quanta, "largest lambda + 2 mu")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "random draws per irrep")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << SU3_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*dim) {
      out << dimension(irrep.label()) << '\n';
    } else if (*basis) {
      const IrrepBasis b(irrep.label());
      if (as_json) {
        emit(out, basis_json(b));
      } else {
        out << "index  p  q  r  nu1 nu2 nu3  I     M\n";
        for (std::size_t k = 0; k < b.size(); ++k) {
          const auto& w = b[k];
          const auto gt = gt_from_weight(b.irrep(), w);
          out << std::setw(5) << k << std::setw(3) << gt.p << std::setw(3) << gt.q
              << std::setw(3) << gt.r << std::setw(5) << w.nu[0] << std::setw(4) << w.nu[1]
              << std::setw(4) << w.nu[2] << "  " << std::left << std::setw(6)
              << w.spin.to_string() << w.projection().to_string() << std::right << '\n';
        }
      }
    } else if (*weyl) {
      const WeylElement w = parse_weyl_element(element);
      emit(out, to_json(make_document(weyl_matrix(irrep.label(), w), "weyl",
                                      {{"element", to_string(w)}})));
    } else if (*dfun) {
      const auto v = parse_list(params_text, 8, "--params");
      const SU3Params p = SU3Params::from_array(v);
      emit(out, to_json(make_document(su3_wigner_matrix(irrep.label(), p), "dfun",
                                      params_json(p))));
    } else if (*so3) {
      const auto v = parse_list(angles_text, 3, "--angles");
      emit(out, to_json(make_document(so3_matrix(irrep.label(), v[0], v[1], v[2]), "so3",
                                      {{"alpha", v[0]}, {"beta", v[1]}, {"gamma", v[2]}})));
    } else if (*factorize) {
      std::ifstream in(matrix_file);
      if (!in) throw UsageError("cannot open matrix file '" + matrix_file + "'");
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("matrix file is not valid JSON: ") + e.what());
      }
      Eigen::MatrixXcd m;
      try {
        m = matrix_from_json(doc);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
      if (m.rows() != 3 || m.cols() != 3) throw ValidationError("factorize needs a 3x3 matrix");
      const Tolerances tol = Tolerances::from_environment();
      const auto g = UnitaryMatrix3::validated(m, tol.unitarity);
      const SU3Params p = factorize_su3(g);
      const double residual =
          (g.matrix() - compose_defining(p).matrix()).cwiseAbs().maxCoeff();
      emit(out, {{"params", params_json(p)}, {"residual", residual}});
    } else if (*verify) {
      const auto results = run_verification({max_quanta, seed, samples});
      print_report(out, results);
      for (const auto& r : results)
        if (!r.passed) return 1;
    }
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "validation error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace su3
