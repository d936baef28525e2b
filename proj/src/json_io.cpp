#include "su3/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace su3 {
namespace {

json complex_pair(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("non-finite matrix entry");
  return json::array({z.real(), z.imag()});
}

std::complex<double> parse_pair(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

constexpr std::array<const char*, 8> kParamNames = {"alpha1", "beta1", "gamma1", "alpha2",
                                                    "beta2",  "alpha3", "beta3", "gamma3"};

}  // namespace

json basis_record(IrrepLabel irrep, const WeightState& w) {
  const GTPattern gt = gt_from_weight(irrep, w);
  return {{"p", gt.p},
          {"q", gt.q},
          {"r", gt.r},
          {"nu", json::array({w.nu[0], w.nu[1], w.nu[2]})},
          {"twoI", w.spin.twice()},
          {"twoM", w.projection().twice()}};
}

json basis_json(const IrrepBasis& basis) {
  json out = json::array();
  for (const auto& w : basis.states()) out.push_back(basis_record(basis.irrep(), w));
  return out;
}

MatrixDocument make_document(const OperatorMatrix& m, std::string operation, json parameters) {
  MatrixDocument doc;
  doc.irrep = m.irrep();
  doc.basis = m.basis->states();
  doc.entries = m.entries;
  doc.operation = std::move(operation);
  doc.parameters = std::move(parameters);
  return doc;
}

json to_json(const MatrixDocument& doc) {
  json basis = json::array();
  for (const auto& w : doc.basis) basis.push_back(basis_record(doc.irrep, w));
  json entries = json::array();
  for (Eigen::Index r = 0; r < doc.entries.rows(); ++r)
    for (Eigen::Index c = 0; c < doc.entries.cols(); ++c)
      entries.push_back(complex_pair(doc.entries(r, c)));
  return {{"basis", std::move(basis)},
          {"entries", std::move(entries)},
          {"meta",
           {{"lambda", doc.irrep.lambda},
            {"mu", doc.irrep.mu},
            {"operation", doc.operation},
            {"parameters", doc.parameters},
            {"tool_version", doc.tool_version}}}};
}

MatrixDocument matrix_document_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("entries") || !j.contains("meta"))
    throw std::invalid_argument("matrix document needs basis, entries and meta");
  MatrixDocument doc;
  const json& meta = j.at("meta");
  doc.irrep = {meta.at("lambda").get<int>(), meta.at("mu").get<int>()};
  validate(doc.irrep);
  doc.operation = meta.value("operation", "");
  doc.parameters = meta.value("parameters", json::object());
  doc.tool_version = meta.value("tool_version", "");
  for (const json& rec : j.at("basis")) {
    const auto nu = rec.at("nu").get<std::array<int, 3>>();
    WeightState w{nu, HalfInt::from_twice(rec.at("twoI").get<int>())};
    const GTPattern gt = gt_from_weight(doc.irrep, w);
    if (gt.p != rec.at("p").get<int>() || gt.q != rec.at("q").get<int>() ||
        gt.r != rec.at("r").get<int>() || w.projection().twice() != rec.at("twoM").get<int>())
      throw std::invalid_argument("basis record labels are inconsistent");
    doc.basis.push_back(w);
  }
  const json& entries = j.at("entries");
  const auto n = static_cast<Eigen::Index>(doc.basis.size());
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n * n)
    throw std::invalid_argument("entries length must equal basis size squared");
  doc.entries.resize(n, n);
  for (Eigen::Index k = 0; k < n * n; ++k) {
    const auto z = parse_pair(entries[static_cast<std::size_t>(k)]);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("non-finite matrix entry");
    doc.entries(k / n, k % n) = z;
  }
  return doc;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (j.is_object() && j.contains("rows")) {
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw std::invalid_argument("rows must be a list");
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        throw std::invalid_argument("matrix must be square");
      for (Eigen::Index c = 0; c < n; ++c) m(r, c) = parse_pair(row[static_cast<std::size_t>(c)]);
    }
    return m;
  }
  if (j.is_object() && j.contains("entries")) {
    const json& entries = j.at("entries");
    const auto count = static_cast<Eigen::Index>(entries.size());
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(count))));
    if (n * n != count || n == 0) throw std::invalid_argument("entries do not form a square");
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index k = 0; k < count; ++k)
      m(k / n, k % n) = parse_pair(entries[static_cast<std::size_t>(k)]);
    return m;
  }
  throw std::invalid_argument("expected {\"rows\": ...} or a matrix document");
}

json rows_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}};
}

json params_json(const SU3Params& p) {
  const auto values = p.to_array();
  json out = json::object();
  for (std::size_t k = 0; k < values.size(); ++k) out[kParamNames[k]] = values[k];
  return out;
}

SU3Params params_from_json(const json& j) {
  std::array<double, 8> values{};
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = j.at(kParamNames[k]).get<double>();
  return SU3Params::from_array(values);
}

}  // namespace su3
