#include "kostka/json_io.hpp"

namespace kostka {

json to_json(const Rational& x) { return x.str(); }

json to_json(const Cyclotomic& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(c.str());
  return out;
}

json to_json(const Poly& p) {
  json out = json::object();
  for (int e = 0; e <= p.degree(); ++e) {
    Cyclotomic c = p.coeff(e);
    if (c.is_zero()) continue;
    out[std::to_string(e)] = to_json(c);
  }
  return out;
}

json to_json(const RatFunc& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const Partition& p) {
  json out = json::array();
  for (int x : p.parts()) out.push_back(x);
  return out;
}

json to_json(const MultiPartition& p) {
  json out = json::array();
  for (const auto& comp : p.components()) out.push_back(to_json(comp));
  return out;
}

json to_json(const SymExpansion& e) {
  json terms = json::array();
  for (const auto& [la, c] : e.terms) terms.push_back(json{{"label", to_json(la)}, {"coeff", to_json(c)}});
  return json{{"level", e.level}, {"degree", e.degree}, {"terms", terms}};
}

json to_json(const SkewTableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) {
    json r = json::array();
    for (int x : row) r.push_back(x);
    rows.push_back(r);
  }
  return json{{"shape", to_json(t.shape().outer)}, {"inner", to_json(t.shape().inner)}, {"rows", rows}};
}

json to_json(const MultiTableau& t) {
  json out = json::array();
  for (const auto& comp : t.components) out.push_back(to_json(comp));
  return out;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw usage_error("expected rational string");
  return Rational::from_string(j.get<std::string>());
}

Cyclotomic cyclotomic_from_json(const json& j, int order) {
  if (!j.is_array()) throw usage_error("expected coordinate array");
  std::vector<Rational> coords;
  for (const auto& e : j) coords.push_back(rational_from_json(e));
  return Cyclotomic(order, std::move(coords));
}

Poly poly_from_json(const json& j, int order) {
  if (!j.is_object()) throw usage_error("expected exponent map");
  Poly out(order);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int e = std::stoi(it.key());
    out += Poly::t_power(order, e, cyclotomic_from_json(it.value(), order));
  }
  return out;
}

RatFunc ratfunc_from_json(const json& j, int order) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw usage_error("expected {num, den}");
  return RatFunc(poly_from_json(j.at("num"), order), poly_from_json(j.at("den"), order));
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw usage_error("expected partition as array, e.g. [3,1]");
  std::vector<int> parts;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw usage_error("partition entries must be integers");
    parts.push_back(e.get<int>());
  }
  return Partition(std::move(parts));
}

MultiPartition multipartition_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw usage_error("expected nested arrays, e.g. [[2,1],[],[1]]");
  std::vector<Partition> comps;
  for (const auto& e : j) comps.push_back(partition_from_json(e));
  return MultiPartition(std::move(comps));
}

}  // namespace kostka
