#include "drgtight/io.hpp"

#include <json.hpp>

namespace drgtight {

namespace {

using nlohmann::json;

Scalar scalar_from_json(const json& v, const char* where) {
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return Scalar::from_int(v.get<long>());
  if (v.is_number_float()) return Scalar::from_double(v.get<double>());
  throw ValidationError(std::string(where) + " entries must be scalar strings or numbers");
}

}  // namespace

ArrayDocument parse_array_document(const std::string& json_text, const Tolerance& tol) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) throw ValidationError("input is not valid JSON");
  if (!doc.is_object()) throw ValidationError("input document must be a JSON object");
  if (!doc.contains("D") || !doc["D"].is_number_integer())
    throw ValidationError("missing integer field \"D\"");
  if (!doc.contains("b") || !doc["b"].is_array())
    throw ValidationError("missing array field \"b\"");
  if (!doc.contains("c") || !doc["c"].is_array())
    throw ValidationError("missing array field \"c\"");

  std::string name;
  if (doc.contains("name") && doc["name"].is_string()) name = doc["name"].get<std::string>();

  std::vector<Scalar> b, c;
  for (const json& v : doc["b"]) b.push_back(scalar_from_json(v, "\"b\""));
  for (const json& v : doc["c"]) c.push_back(scalar_from_json(v, "\"c\""));
  return ArrayDocument{std::move(name),
                       validate_array(doc["D"].get<int>(), std::move(b), std::move(c), tol)};
}

std::string array_to_json(const IntersectionArray& arr, const std::string& name) {
  json doc;
  if (!name.empty()) doc["name"] = name;
  doc["D"] = arr.diameter();
  json b = json::array(), c = json::array(), a = json::array();
  for (int i = 0; i <= arr.diameter() - 1; ++i) b.push_back(arr.b(i).str());
  for (int i = 1; i <= arr.diameter(); ++i) c.push_back(arr.c(i).str());
  for (int i = 0; i <= arr.diameter(); ++i) a.push_back(arr.a(i).str());
  doc["b"] = std::move(b);
  doc["c"] = std::move(c);
  doc["a"] = std::move(a);
  doc["k"] = arr.k().str();
  if (arr.c_D_unconstrained) doc["c_D_unconstrained"] = true;
  if (!arr.warnings().empty()) doc["warnings"] = arr.warnings();
  return doc.dump(2);
}

std::string report_to_json(const ClassificationReport& report) {
  json doc;
  doc["case"] = to_string(report.tag);
  doc["universal"] = report.universal_rules;
  json pairs = json::array();
  for (const SpecialPair& p : report.special_pairs) {
    json jp;
    jp["theta"] = p.theta.str();
    jp["theta_prime"] = p.theta_prime.str();
    jp["epsilon"] = p.epsilon.str();
    jp["verified"] = p.verified;
    if (p.trivial) jp["trivial"] = true;
    pairs.push_back(std::move(jp));
  }
  doc["pairs"] = std::move(pairs);
  doc["warnings"] = report.warnings;
  return doc.dump(2);
}

}  // namespace drgtight
