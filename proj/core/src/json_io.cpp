#include "twistprod/json_io.hpp"

#include <fstream>

namespace twistprod {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const char* what) {
  if (!j.contains(key))
    throw ParseError(std::string(what) + " is missing required key \"" + key + "\"");
  return j.at(key);
}

std::vector<std::string> labels_from(const json& j) {
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  return labels;
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json_text(text, path.string());
}

LieAlgebra lie_algebra_from_json(const json& j) {
  const int dim = require(j, "dim", "lie algebra").get<int>();
  if (dim <= 0) throw ParseError("lie algebra dim must be positive");
  std::vector<ConstantEntry> entries;
  for (const auto& row : require(j, "constants", "lie algebra")) {
    if (!row.is_array() || row.size() != 4)
      throw ParseError("constant rows are [i, j, k, value]");
    const int i = row[0].get<int>(), jj = row[1].get<int>(), k = row[2].get<int>();
    if (i < 1 || jj < 1 || k < 1 || i > dim || jj > dim || k > dim)
      throw ParseError("constant index out of range (1-based)");
    if (i >= jj) throw ParseError("constants must have i < j; the mirror half is implied");
    entries.push_back({i - 1, jj - 1, k - 1, row[3].get<double>()});
  }
  return LieAlgebra(StructureTensor::from_entries(dim, entries), labels_from(j));
}

json lie_algebra_to_json(const LieAlgebra& alg) {
  json constants = json::array();
  for (const auto& e : alg.tensor().lower_entries())
    constants.push_back({e.i + 1, e.j + 1, e.k + 1, e.value});
  return {{"dim", alg.dim()}, {"labels", alg.basis_labels()}, {"constants", constants}};
}

InfinitesimalAction action_from_json(const json& j) {
  InfinitesimalAction action;
  action.acting_dim = require(j, "acting_dim", "action").get<int>();
  action.target_dim = require(j, "target_dim", "action").get<int>();
  for (const auto& m : require(j, "matrices", "action")) {
    Eigen::MatrixXd mat(action.target_dim, action.target_dim);
    if (static_cast<int>(m.size()) != action.target_dim)
      throw ParseError("action matrix must have target_dim rows");
    for (int r = 0; r < action.target_dim; ++r) {
      if (static_cast<int>(m[r].size()) != action.target_dim)
        throw ParseError("action matrix must have target_dim columns");
      for (int c = 0; c < action.target_dim; ++c) mat(r, c) = m[r][c].get<double>();
    }
    action.matrices.push_back(std::move(mat));
  }
  action.validate_shape();
  return action;
}

json action_to_json(const InfinitesimalAction& action) {
  json matrices = json::array();
  for (const auto& m : action.matrices) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    matrices.push_back(std::move(rows));
  }
  return {{"acting_dim", action.acting_dim},
          {"target_dim", action.target_dim},
          {"matrices", matrices}};
}

namespace {

json resolve(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return load_json_file(base_dir / j.get<std::string>());
  return j;
}

}  // namespace

TwistSpec twist_spec_from_json(const json& j, const std::filesystem::path& base_dir) {
  TwistSpec spec{lie_algebra_from_json(resolve(require(j, "g", "twist spec"), base_dir)),
                 lie_algebra_from_json(resolve(require(j, "h", "twist spec"), base_dir)),
                 action_from_json(resolve(require(j, "L", "twist spec"), base_dir)),
                 action_from_json(resolve(require(j, "M", "twist spec"), base_dir))};
  spec.validate_dimensions();
  return spec;
}

json twist_spec_to_json(const TwistSpec& spec) {
  return {{"g", lie_algebra_to_json(spec.g)},
          {"h", lie_algebra_to_json(spec.h)},
          {"L", action_to_json(spec.L)},
          {"M", action_to_json(spec.M)}};
}

CayleyGroup cayley_group_from_json(const json& j) {
  const int order = require(j, "order", "group").get<int>();
  const json& rows = require(j, "table", "group");
  if (static_cast<int>(rows.size()) != order) throw ParseError("group table must have order rows");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order)
      throw ParseError("group table rows must have order entries");
    for (const auto& v : row) table.push_back(v.get<int>());
  }
  try {
    return CayleyGroup(order, std::move(table), labels_from(j));
  } catch (const IngestionError& e) {
    throw ParseError(std::string("group table rejected: ") + e.what());
  }
}

json cayley_group_to_json(const CayleyGroup& g) {
  json rows = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  return {{"order", g.order()}, {"labels", g.labels()}, {"table", rows}};
}

GroupAction group_action_from_json(const json& j, const CayleyGroup& source,
                                   const CayleyGroup& target) {
  GroupAction action{source, target, {}};
  for (const auto& perm : require(j, "maps", "group action")) {
    std::vector<int> p;
    for (const auto& v : perm) p.push_back(v.get<int>());
    action.maps.push_back(std::move(p));
  }
  if (static_cast<int>(action.maps.size()) != source.order())
    throw ParseError("group action needs one permutation per source element");
  for (const auto& p : action.maps)
    if (static_cast<int>(p.size()) != target.order())
      throw ParseError("group action permutations must cover the target group");
  return action;
}

json group_action_to_json(const GroupAction& action) {
  return {{"maps", action.maps}};
}

json curvature_report_to_json(const CurvatureReport& report) {
  json rows = json::array();
  for (int i = 0; i < report.sectional.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < report.sectional.cols(); ++k) row.push_back(report.sectional(i, k));
    rows.push_back(std::move(row));
  }
  return {{"sectional", rows}, {"scalar", report.scalar}, {"method", to_string(report.method)}};
}

json six_rho_report_to_json(const SixRhoReport& report) {
  return {{"rho", report.rho},
          {"rho_prime", report.rho_prime},
          {"ratio", report.ratio},
          {"pass", report.pass},
          {"rho_shortcut", report.rho_shortcut},
          {"rho_prime_shortcut", report.rho_prime_shortcut}};
}

json validation_report_to_json(const ValidationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"at", {f.where[0] + 1, f.where[1] + 1, f.where[2] + 1}},
                        {"residual", f.residual}});
  return {{"check", report.check}, {"pass", report.pass}, {"failures", failures}};
}

json bundle_to_json(const BuiltinBundle& bundle) {
  json j{{"name", bundle.name},
         {"description", bundle.description},
         {"algebra", lie_algebra_to_json(bundle.algebra)}};
  if (bundle.twist) j["twist"] = twist_spec_to_json(*bundle.twist);
  json expected;
  if (bundle.expected.sectional) {
    json rows = json::array();
    for (int i = 0; i < bundle.expected.sectional->rows(); ++i) {
      json row = json::array();
      for (int k = 0; k < bundle.expected.sectional->cols(); ++k)
        row.push_back((*bundle.expected.sectional)(i, k));
      rows.push_back(std::move(row));
    }
    expected["sectional"] = rows;
  }
  if (bundle.expected.scalar) expected["scalar"] = *bundle.expected.scalar;
  json constants = json::array();
  for (const auto& e : bundle.expected.constants)
    constants.push_back({e.i + 1, e.j + 1, e.k + 1, e.value});
  expected["constants"] = constants;
  j["expected"] = expected;
  return j;
}

}  // namespace twistprod
