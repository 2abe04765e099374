/*
   Copyright 2026 The flagseries Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "flagseries/document.hpp"

namespace flagseries {

namespace {

Json request_json(const Request& r) {
  Json j;
  j["type"] = std::string(1, static_cast<char>(r.type.family()));
  j["rank"] = r.type.rank();
  j["weight"] = Json::array();
  for (long m : r.weight.coords()) j["weight"].push_back(m);
  return j;
}

Json header(const char* command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

}  // namespace

Json polynomial_to_json(const RationalPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

RationalPolynomial polynomial_from_json(const Json& j) {
  std::vector<BigRational> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
  return RationalPolynomial(std::move(coeffs));
}

Json analysis_document(const Request& request, const HilbertData& data) {
  Json doc = header("analyze");
  doc["request"] = request_json(request);
  Json& r = doc["results"];
  r["dim_variety"] = std::to_string(data.dim_variety);
  r["embedding_degree"] = to_string(data.embedding_degree);
  r["dim_irrep"] = to_string(data.dim_irrep);
  r["exp_polynomial"] = polynomial_to_json(data.exp_polynomial.poly);
  r["hilbert_polynomial"] = polynomial_to_json(data.hilbert_polynomial);
  r["hs_numerator"] = polynomial_to_json(data.hs_numerator);
  r["hs_pole_order"] = std::to_string(data.dim_variety + 1);
  return doc;
}

HilbertData hilbert_data_from_json(const Json& r) {
  HilbertData d;
  d.dim_variety = std::stol(r.at("dim_variety").get<std::string>());
  d.embedding_degree = parse_rational(r.at("embedding_degree").get<std::string>()).get_num();
  d.dim_irrep = parse_rational(r.at("dim_irrep").get<std::string>()).get_num();
  d.exp_polynomial.poly = polynomial_from_json(r.at("exp_polynomial"));
  d.hilbert_polynomial = polynomial_from_json(r.at("hilbert_polynomial"));
  d.hs_numerator = polynomial_from_json(r.at("hs_numerator"));
  return d;
}

Json series_document(const Request& request, const ExpPolynomial& p, const std::vector<SeriesRow>& rows) {
  Json doc = header("series");
  doc["request"] = request_json(request);
  Json& r = doc["results"];
  r["exp_polynomial"] = polynomial_to_json(p.poly);
  r["series"] = Json::array();
  for (const auto& row : rows) {
    Json e;
    e["n"] = row.n;
    e["dim"] = to_string(row.dimension);
    r["series"].push_back(std::move(e));
  }
  return doc;
}

Json roots_document(const RootSystem& system) {
  Json doc = header("roots");
  doc["request"] = {{"type", std::string(1, static_cast<char>(system.type.family()))}, {"rank", system.rank()}};
  Json& r = doc["results"];
  r["cartan"] = system.cartan;
  r["symmetrizers"] = system.symmetrizers;
  r["count"] = system.positive_roots.size();
  r["positive_roots"] = Json::array();
  for (const auto& root : system.positive_roots) {
    Json e;
    e["coords"] = root;
    e["height"] = height(root);
    r["positive_roots"].push_back(std::move(e));
  }
  return doc;
}

Json verify_document(const std::vector<IdentityReport>& reports) {
  Json doc = header("verify");
  Json& list = doc["results"]["reports"];
  list = Json::array();
  bool all = true;
  for (const auto& rep : reports) {
    Json e;
    e["id"] = rep.id;
    e["identity"] = rep.identity_name;
    e["range"] = rep.parameter_range;
    e["checked"] = rep.checked_count;
    e["verified"] = rep.verified();
    e["failures"] = Json::array();
    for (const auto& f : rep.failures) e["failures"].push_back({{"parameters", f.parameters}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    list.push_back(std::move(e));
    all = all && rep.verified();
  }
  doc["results"]["all_verified"] = all;
  return doc;
}

}  // namespace flagseries
