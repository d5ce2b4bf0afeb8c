#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "chartab/error.hpp"

namespace chartab::table {

// Per class a sorted set of candidate images (0-based). Single-element sets are determined entries.
class ClassMap {
 public:
  using Entry = std::vector<int>;

  ClassMap() = default;
  explicit ClassMap(std::vector<Entry> entries) : e_(std::move(entries)) {
    for (auto& s : e_) normalize(s);
  }
  static ClassMap from_determined(const std::vector<int>& images) {
    ClassMap m;
    for (int x : images) m.e_.push_back({x});
    return m;
  }

  std::size_t size() const { return e_.size(); }
  const Entry& operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Entry>& entries() const { return e_; }
  void set(std::size_t i, Entry s) {
    normalize(s);
    e_[i] = std::move(s);
  }

  bool is_determined() const {
    return std::all_of(e_.begin(), e_.end(), [](const Entry& s) { return s.size() == 1; });
  }
  std::vector<int> determined() const {
    if (!is_determined()) fail(ErrorKind::map, "class map is not determined");
    std::vector<int> out;
    for (const auto& s : e_) out.push_back(s[0]);
    return out;
  }
  std::size_t ambiguity() const {
    std::size_t n = 0;
    for (const auto& s : e_) n += s.size();
    return n;
  }

  friend bool operator==(const ClassMap&, const ClassMap&) = default;
  friend bool operator<(const ClassMap& a, const ClassMap& b) { return a.e_ < b.e_; }

  // 1-based text such as [1, [2,3], 4].
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ", ";
      if (e_[i].size() == 1) {
        s += std::to_string(e_[i][0] + 1);
      } else {
        s += "[";
        for (std::size_t j = 0; j < e_[i].size(); ++j) s += (j ? "," : "") + std::to_string(e_[i][j] + 1);
        s += "]";
      }
    }
    return s + "]";
  }

 private:
  std::vector<Entry> e_;

  static void normalize(Entry& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
};

// (outer o inner)(i) = union of outer(j) over j in inner(i).
inline ClassMap compose_maps(const ClassMap& outer, const ClassMap& inner) {
  std::vector<ClassMap::Entry> out;
  for (const auto& s : inner.entries()) {
    ClassMap::Entry u;
    for (int j : s) {
      if (j < 0 || static_cast<std::size_t>(j) >= outer.size()) fail(ErrorKind::index, "class map composition out of range");
      u.insert(u.end(), outer[j].begin(), outer[j].end());
    }
    out.push_back(std::move(u));
  }
  return ClassMap(std::move(out));
}

// Preimage sets on a codomain of the given size; classes that are never hit get empty entries.
inline ClassMap inverse_map(const ClassMap& m, std::size_t codomain) {
  std::vector<ClassMap::Entry> out(codomain);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int j : m[i]) {
      if (j < 0 || static_cast<std::size_t>(j) >= codomain) fail(ErrorKind::index, "class map value out of range");
      out[j].push_back(static_cast<int>(i));
    }
  return ClassMap(std::move(out));
}

inline ClassMap meet_maps(const ClassMap& a, const ClassMap& b) {
  if (a.size() != b.size()) fail(ErrorKind::shape, "class maps of different lengths");
  std::vector<ClassMap::Entry> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ClassMap::Entry s;
    std::set_intersection(a[i].begin(), a[i].end(), b[i].begin(), b[i].end(), std::back_inserter(s));
    if (s.empty()) fail(ErrorKind::inconsistency, "empty intersection at class " + std::to_string(i + 1));
    out.push_back(std::move(s));
  }
  return ClassMap(std::move(out));
}

inline constexpr std::size_t default_contained_cap = 1000000;

// All determined refinements, lexicographically ordered.
inline std::vector<std::vector<int>> contained_maps(const ClassMap& m, std::size_t cap = default_contained_cap) {
  std::size_t count = 1;
  for (const auto& s : m.entries()) {
    if (s.empty()) return {};
    if (count > cap / s.size()) fail(ErrorKind::cap_exceeded, "too many contained maps");
    count *= s.size();
  }
  std::vector<std::vector<int>> out;
  out.reserve(count);
  std::vector<int> cur(m.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.size()) {
      out.push_back(cur);
      return;
    }
    for (int x : m[i]) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace chartab::table
