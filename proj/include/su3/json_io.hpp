#pragma once

// JSON interchange. A matrix document is
//   {"basis":   [{"p":..,"q":..,"r":..,"nu":[..],"twoI":..,"twoM":..}, ...],
//    "entries": [[re, im], ...]   (row-major, basis.size()^2 pairs),
//    "meta":    {"lambda":..,"mu":..,"operation":..,"parameters":..,"tool_version":..}}
// A bare input matrix is {"rows": [[[re, im], ...], ...]}.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "su3/basis.hpp"
#include "su3/dfun.hpp"
#include "su3/operator_matrix.hpp"

namespace su3 {

using json = nlohmann::json;

struct MatrixDocument {
  IrrepLabel irrep;
  std::vector<WeightState> basis;
  Eigen::MatrixXcd entries;
  std::string operation;
  json parameters = json::object();
  std::string tool_version = SU3_VERSION;
};

json basis_record(IrrepLabel irrep, const WeightState& w);
json basis_json(const IrrepBasis& basis);

MatrixDocument make_document(const OperatorMatrix& m, std::string operation, json parameters);

/// Throws std::invalid_argument on non-finite entries.
json to_json(const MatrixDocument& doc);
/// Throws std::invalid_argument on schema violations.
MatrixDocument matrix_document_from_json(const json& j);

/// Accepts {"rows": ...} or a matrix document's "entries" (square, row-major).
Eigen::MatrixXcd matrix_from_json(const json& j);
json rows_json(const Eigen::MatrixXcd& m);

json params_json(const SU3Params& p);
SU3Params params_from_json(const json& j);

}  // namespace su3
