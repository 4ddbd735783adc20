#include "drinfeld/algebra_io.hpp"

#include <json.hpp>

namespace drinfeld {

using nlohmann::json;

std::string lie_algebra_to_json(const LieAlgebra& a, int indent) {
  json doc;
  doc["dim"] = a.dim();
  doc["field"] = (a.field() == Field::Real) ? "real" : "complex";
  doc["labels"] = a.labels();
  json triples = json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (a.c(i, j, k) != 0.0)
          triples.push_back({i, j, k, a.c(i, j, k)});
  doc["triples"] = std::move(triples);
  return doc.dump(indent);
}

LieAlgebra lie_algebra_from_json(const std::string& text) {
  json doc = json::parse(text);
  const int dim = doc.at("dim").get<int>();
  const std::string field_name = doc.at("field").get<std::string>();
  if (field_name != "real" && field_name != "complex")
    throw ModelError("lie_algebra_from_json: unknown field tag");
  const Field field = (field_name == "real") ? Field::Real : Field::Complex;
  std::vector<std::string> labels;
  if (doc.contains("labels"))
    labels = doc.at("labels").get<std::vector<std::string>>();
  std::vector<std::tuple<int, int, int, double>> triples;
  for (const auto& t : doc.at("triples")) {
    if (!t.is_array() || t.size() != 4)
      throw ModelError("lie_algebra_from_json: malformed triple");
    triples.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                         t[3].get<double>());
  }
  return LieAlgebra::from_triples(dim, field, triples, std::move(labels));
}

std::string subspace_to_json(const Subspace& s, int indent) {
  json doc;
  doc["ambient_dim"] = s.ambient_dim();
  json cols = json::array();
  for (int i = 0; i < s.dim(); ++i) {
    json col = json::array();
    RVec v = s.basis_vector(i);
    for (int r = 0; r < s.ambient_dim(); ++r) col.push_back(v[r]);
    cols.push_back(std::move(col));
  }
  doc["basis"] = std::move(cols);
  return doc.dump(indent);
}

Subspace subspace_from_json(const std::string& text) {
  json doc = json::parse(text);
  const int ambient = doc.at("ambient_dim").get<int>();
  const auto& cols = doc.at("basis");
  RMat basis(ambient, static_cast<int>(cols.size()));
  int c = 0;
  for (const auto& col : cols) {
    if (static_cast<int>(col.size()) != ambient)
      throw ModelError("subspace_from_json: basis column has wrong length");
    for (int r = 0; r < ambient; ++r) basis(r, c) = col[r].get<double>();
    ++c;
  }
  return Subspace(ambient, std::move(basis));
}

}  // namespace drinfeld
