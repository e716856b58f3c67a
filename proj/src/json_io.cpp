#include "baxter/json_io.hpp"

namespace baxter {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  const std::size_t dim = j.at("dim").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (rows.size() != dim) throw parse_error("matrix JSON: row count != dim");
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) throw parse_error("matrix JSON: column count != dim");
    for (std::size_t c = 0; c < dim; ++c)
      m.at(r, c) = Scalar::parse(rows[r][c].get<std::string>());
  }
  return m;
}

json report_to_json(const CheckReport& r) {
  json j{{"passed", r.passed}};
  if (r.witness) {
    j["witness"] = json{{"row", r.witness->row},
                        {"col", r.witness->col},
                        {"residual", r.witness->residual.str()},
                        {"desc", r.witness->desc}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json instance_to_json(const FamilyInstance& f) {
  json params = json::object();
  for (const auto& [k, v] : f.params) params[k] = v.str();
  return json{{"family", family_name(f.family)}, {"m", f.m}, {"params", std::move(params)}};
}

FamilyInstance instance_from_json(const json& j) {
  FamilyInstance f;
  f.family = family_from_name(j.at("family").get<std::string>());
  f.m = j.value("m", 2);
  for (const auto& [k, v] : j.at("params").items())
    f.params.emplace(k, Scalar::parse(v.get<std::string>()));
  return f;
}

}  // namespace baxter
