#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "chartab/cyclo/cyclotomic.hpp"
#include "chartab/io/files.hpp"
#include "chartab/io/matrix_text.hpp"
#include "chartab/table/head.hpp"

namespace chartab::io {

using nlohmann::json;

namespace detail {

inline BigInt parse_bigint(const std::string& s, const std::string& field) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) fail(ErrorKind::parse, field + ": '" + s + "' is not a decimal integer");
  return v;
}

inline cyclo::Cyclotomic parse_value(const std::string& s, const std::string& where) {
  try {
    return cyclo::parse(s);
  } catch (const Error& e) {
    fail(ErrorKind::parse, where + ": " + e.what());
  }
}

}  // namespace detail

// JSON document: identifier, size, orders, centralizers, powermaps {"<p>": [1-based images]}, names,
// irr (rows of cyclotomic strings). Big integers are decimal strings.
inline json table_to_json(const table::CharacterTable& t) {
  const auto& h = t.head;
  json j;
  j["identifier"] = h.identifier;
  j["size"] = to_string(h.size);
  j["orders"] = h.orders;
  json cents = json::array();
  for (const auto& c : h.centralizers) cents.push_back(to_string(c));
  j["centralizers"] = cents;
  json pm = json::object();
  for (const auto& [p, map] : h.powermaps) {
    json a = json::array();
    for (int x : map) a.push_back(x + 1);
    pm[std::to_string(p)] = a;
  }
  j["powermaps"] = pm;
  j["names"] = h.names;
  json irr = json::array();
  for (const auto& chi : t.irr) {
    json row = json::array();
    for (const auto& v : chi) row.push_back(v.str());
    irr.push_back(row);
  }
  j["irr"] = irr;
  return j;
}

inline table::CharacterTable table_from_json(const json& j) {
  table::CharacterTable t;
  auto& h = t.head;
  try {
    h.identifier = j.value("identifier", std::string());
    h.size = detail::parse_bigint(j.at("size").get<std::string>(), "size");
    h.orders = j.at("orders").get<std::vector<std::int64_t>>();
    for (const auto& c : j.at("centralizers")) h.centralizers.push_back(detail::parse_bigint(c.get<std::string>(), "centralizers"));
    if (j.contains("powermaps"))
      for (const auto& [k, v] : j.at("powermaps").items()) {
        int p = 0;
        try {
          std::size_t used = 0;
          p = std::stoi(k, &used);
          if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
          fail(ErrorKind::parse, "powermaps: key '" + k + "' is not an integer");
        }
        table::PowerMap map;
        for (const auto& x : v) map.push_back(x.get<int>() - 1);
        h.powermaps[p] = std::move(map);
      }
    if (j.contains("names")) h.names = j.at("names").get<std::vector<std::string>>();
    if (j.contains("irr"))
      for (const auto& row : j.at("irr")) {
        table::ClassFunction chi;
        for (const auto& v : row)
          chi.push_back(detail::parse_value(v.get<std::string>(), "irr row " + std::to_string(t.irr.size() + 1)));
        t.irr.push_back(std::move(chi));
      }
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, e.what());
  }
  table::validate(h);
  for (std::size_t i = 0; i < t.irr.size(); ++i)
    if (t.irr[i].size() != h.ncls())
      fail(ErrorKind::validation, "head rule 'lengths' violated: irr row " + std::to_string(i + 1) + " has the wrong length");
  return t;
}

inline std::string write_table(const table::CharacterTable& t) { return table_to_json(t).dump(2) + "\n"; }

inline table::CharacterTable read_table(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, e.what());
  }
  return table_from_json(j);
}

inline table::CharacterTable load_table(const std::string& path) { return read_table(read_file(path)); }
inline void save_table(const table::CharacterTable& t, const std::string& path) { write_file(path, write_table(t)); }

// head <identifier>, then one value per line.
inline std::string write_class_function(const table::ClassFunction& chi, const std::string& head_identifier) {
  std::string out = "head " + head_identifier + "\n";
  for (const auto& v : chi) out += v.str() + "\n";
  return out;
}

struct ClassFunctionFile {
  std::string head;
  table::ClassFunction values;
};

inline ClassFunctionFile read_class_function(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0].rfind("head", 0) != 0 || (lines[0].size() > 4 && lines[0][4] != ' '))
    fail(ErrorKind::parse, at_line(1, "expected 'head <identifier>'"));
  ClassFunctionFile f;
  f.head = lines[0].size() > 5 ? lines[0].substr(5) : "";
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos) continue;
    f.values.push_back(detail::parse_value(lines[i], "line " + std::to_string(i + 1)));
  }
  return f;
}

// Reads a class function for the given head, checking identifier and length.
inline table::ClassFunction load_class_function(const std::string& path, const table::TableHead& h) {
  auto f = read_class_function(read_file(path));
  if (f.head != h.identifier) fail(ErrorKind::head, path + " belongs to '" + f.head + "', not '" + h.identifier + "'");
  table::check_length(h, f.values);
  return f.values;
}

inline void save_class_function(const table::ClassFunction& chi, const std::string& head_identifier, const std::string& path) {
  write_file(path, write_class_function(chi, head_identifier));
}

}  // namespace chartab::io
