#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "chartab/classify/centralizers.hpp"
#include "chartab/classify/decision.hpp"
#include "chartab/classify/powerinfo.hpp"

namespace chartab::classify {

using nlohmann::json;

namespace detail {

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::not_found, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, path + ": " + e.what());
  }
}

inline std::int64_t parse_key(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) fail(ErrorKind::parse, "integer key expected, got '" + s + "'");
  return v;
}

inline Measurement measurement_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::parse, "measurement must be an object");
  Measurement m;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rank") m.kind = MeasureKind::rank;
  else if (kind == "trace") m.kind = MeasureKind::trace;
  else fail(ErrorKind::parse, "unknown measurement kind '" + kind + "'");
  m.p = j.at("p").get<int>();
  m.power = j.value("power", std::int64_t{1});
  m.exponent = j.value("exponent", std::int64_t{1});
  check_measurement(m);
  return m;
}

inline json measurement_to_json(const Measurement& m) {
  json j;
  j["kind"] = m.kind == MeasureKind::rank ? "rank" : "trace";
  j["p"] = m.p;
  if (m.power != 1) j["power"] = m.power;
  if (m.exponent != 1) j["exponent"] = m.exponent;
  return j;
}

inline int node_from_json(DecisionTable& t, const json& j) {
  if (j.is_string()) return t.add_leaf(j.get<std::string>());
  if (!j.is_object()) fail(ErrorKind::parse, "node must be a label or an object");
  Measurement m = measurement_from_json(j.at("measure"));
  std::map<std::int64_t, int> cases;
  for (const auto& [k, v] : j.at("cases").items()) cases[parse_key(k)] = node_from_json(t, v);
  std::optional<int> fallback;
  if (j.contains("default")) fallback = node_from_json(t, j.at("default"));
  return t.add_branch(m, std::move(cases), fallback);
}

inline json node_to_json(const DecisionTable& t, int i) {
  const DecisionNode& n = t.nodes.at(i);
  if (n.label) return *n.label;
  json j;
  j["measure"] = measurement_to_json(n.measure);
  json cases = json::object();
  for (const auto& [v, c] : n.cases) cases[std::to_string(v)] = node_to_json(t, c);
  j["cases"] = cases;
  if (n.fallback) j["default"] = node_to_json(t, *n.fallback);
  return j;
}

}  // namespace detail

// {"version": 1, "orders": {"<order>": node}}; a node is a label or
// {"measure": {"kind", "p", "power"?, "exponent"?}, "cases": {"<value>": node}, "default"?: node}.
inline DecisionTable decision_table_from_json(const json& j) {
  DecisionTable t;
  try {
    t.version = j.at("version").get<int>();
    if (t.version != 1) fail(ErrorKind::parse, "unsupported decision table version " + std::to_string(t.version));
    for (const auto& [k, v] : j.at("orders").items()) t.roots[detail::parse_key(k)] = detail::node_from_json(t, v);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, e.what());
  }
  t.validate();
  return t;
}

inline json decision_table_to_json(const DecisionTable& t) {
  json orders = json::object();
  for (const auto& [o, r] : t.roots) orders[std::to_string(o)] = detail::node_to_json(t, r);
  return json{{"version", t.version}, {"orders", orders}};
}

inline DecisionTable load_decision_table(const std::string& path) { return decision_table_from_json(detail::read_json_file(path)); }

// {"labels": [...], "edges": {"<label>": [[prime, "<label>"], ...]}}
inline PowerInfoGraph power_info_from_json(const json& j) {
  PowerInfoGraph g;
  try {
    for (const auto& l : j.at("labels")) g.add_label(l.get<std::string>());
    for (const auto& [from, es] : j.at("edges").items())
      for (const auto& e : es) g.set_edge(from, e.at(0).get<int>(), e.at(1).get<std::string>());
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, e.what());
  }
  validate(g);
  return g;
}

inline json power_info_to_json(const PowerInfoGraph& g) {
  json edges = json::object();
  for (const auto& l : g.labels) {
    const auto& es = g.edges.at(l);
    if (es.empty()) continue;
    json a = json::array();
    for (const auto& [p, to] : es) a.push_back(json::array({p, to}));
    edges[l] = a;
  }
  return json{{"labels", g.labels}, {"edges", edges}};
}

inline PowerInfoGraph load_power_info(const std::string& path) { return power_info_from_json(detail::read_json_file(path)); }

// {"classes": [...], "partners": [...], "rootsof": [...]}
inline GaloisInfo galois_info_from_json(const json& j) {
  GaloisInfo g;
  try {
    g.classes = j.at("classes").get<std::vector<std::string>>();
    g.partners = j.at("partners").get<std::vector<std::string>>();
    g.rootsof = j.at("rootsof").get<std::vector<std::int64_t>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, e.what());
  }
  validate(g);
  return g;
}

inline GaloisInfo load_galois_info(const std::string& path) { return galois_info_from_json(detail::read_json_file(path)); }

}  // namespace chartab::classify
