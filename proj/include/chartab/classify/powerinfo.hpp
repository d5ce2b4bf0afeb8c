#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chartab/classify/decision.hpp"
#include "chartab/numbers.hpp"
#include "chartab/table/head.hpp"

namespace chartab::classify {

// "34BC" -> 34. Labels are a decimal order followed by at least one capital letter.
inline std::int64_t label_order(const Label& l) {
  std::size_t i = 0;
  while (i < l.size() && std::isdigit(static_cast<unsigned char>(l[i]))) ++i;
  if (i == 0 || i == l.size() || i > 18) fail(ErrorKind::label, "malformed label '" + l + "'");
  for (std::size_t j = i; j < l.size(); ++j)
    if (!std::isupper(static_cast<unsigned char>(l[j]))) fail(ErrorKind::label, "malformed label '" + l + "'");
  return std::stoll(l.substr(0, i));
}

inline std::string label_letters(const Label& l) {
  label_order(l);
  std::size_t i = 0;
  while (std::isdigit(static_cast<unsigned char>(l[i]))) ++i;
  return l.substr(i);
}

inline bool label_less(const Label& a, const Label& b) {
  std::int64_t oa = label_order(a), ob = label_order(b);
  return oa != ob ? oa < ob : a < b;
}

using PowerEdges = std::map<int, Label>;  // prime -> label of the p-th power

struct PowerInfoGraph {
  std::vector<Label> labels;  // sorted by (order, label)
  std::map<Label, PowerEdges> edges;

  bool contains(const Label& l) const { return edges.count(l) > 0; }

  const PowerEdges& edges_of(const Label& l) const {
    auto it = edges.find(l);
    if (it == edges.end()) fail(ErrorKind::label, "unknown label '" + l + "'");
    return it->second;
  }

  std::optional<Label> image(const Label& l, int p) const {
    const PowerEdges& e = edges_of(l);
    auto it = e.find(p);
    if (it == e.end()) return std::nullopt;
    return it->second;
  }

  void add_label(const Label& l) {
    label_order(l);
    if (contains(l)) fail(ErrorKind::label, "duplicate label '" + l + "'");
    edges[l];
    labels.insert(std::upper_bound(labels.begin(), labels.end(), l, label_less), l);
  }

  void set_edge(const Label& from, int p, const Label& to) {
    const std::int64_t o = label_order(from);
    if (!is_prime(p) || o % p != 0)
      fail(ErrorKind::label, std::to_string(p) + " is not a prime divisor of the order of '" + from + "'");
    if (!contains(from)) fail(ErrorKind::label, "unknown label '" + from + "'");
    if (!contains(to)) fail(ErrorKind::label, "unknown label '" + to + "'");
    if (label_order(to) != o / p) fail(ErrorKind::label, "'" + from + "' cannot power to '" + to + "' under " + std::to_string(p));
    edges[from][p] = to;
  }

  // Label of the d-th power, following prime edges in ascending order of the prime factors.
  Label power_label(const Label& l, std::int64_t d) const {
    Label at = l;
    for (auto [p, e] : factorize(d))
      for (int k = 0; k < e; ++k) {
        auto next = image(at, static_cast<int>(p));
        if (!next) fail(ErrorKind::label, "no " + std::to_string(p) + "-th power recorded for '" + at + "'");
        at = *next;
      }
    return at;
  }

  bool is_complete() const {
    for (const auto& l : labels) {
      std::int64_t o = label_order(l);
      if (o == 1) continue;
      for (auto [p, e] : factorize(o))
        if (!edges.at(l).count(static_cast<int>(p))) return false;
    }
    return true;
  }
};

inline void validate(const PowerInfoGraph& g) {
  std::set<Label> seen;
  for (const auto& l : g.labels) {
    label_order(l);
    if (!seen.insert(l).second) fail(ErrorKind::label, "duplicate label '" + l + "'");
  }
  if (seen.size() != g.edges.size()) fail(ErrorKind::label, "edge table and label list differ");
  if (!std::is_sorted(g.labels.begin(), g.labels.end(), label_less)) fail(ErrorKind::label, "labels not sorted by order");
  if (!seen.count("1A")) fail(ErrorKind::label, "identity label '1A' missing");
  for (const auto& [from, es] : g.edges) {
    if (!seen.count(from)) fail(ErrorKind::label, "edges for unknown label '" + from + "'");
    const std::int64_t o = label_order(from);
    for (const auto& [p, to] : es) {
      if (!is_prime(p) || o % p != 0) fail(ErrorKind::label, "bad prime " + std::to_string(p) + " on '" + from + "'");
      if (!seen.count(to)) fail(ErrorKind::label, "edge from '" + from + "' to unknown label '" + to + "'");
      if (label_order(to) != o / p) fail(ErrorKind::label, "edge '" + from + "' -> '" + to + "' breaks the order rule");
    }
    if (o == 1 && !es.empty()) fail(ErrorKind::label, "the identity label has edges");
  }
}

// Adds edges forced by the label set: a unique label of the target order, or, for primes p != q,
// the unique label z of order o/q with z^p consistent with (x^p)^q. Returns the number added.
inline std::size_t complete_edges(PowerInfoGraph& g) {
  std::map<std::int64_t, std::vector<Label>> by_order;
  for (const auto& l : g.labels) by_order[label_order(l)].push_back(l);
  std::size_t added = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& x : g.labels) {
      const std::int64_t o = label_order(x);
      if (o == 1) continue;
      auto primes = factorize(o);
      for (auto [pp, e] : primes) {
        const int p = static_cast<int>(pp);
        if (g.edges[x].count(p)) continue;
        auto bucket = by_order.find(o / p);
        if (bucket == by_order.end()) fail(ErrorKind::label, "no label of order " + std::to_string(o / p) + " below '" + x + "'");
        const auto& cands = bucket->second;
        std::optional<Label> pick;
        if (cands.size() == 1) pick = cands[0];
        for (auto [qq, f] : primes) {
          const int q = static_cast<int>(qq);
          if (pick || q == p || !g.edges[x].count(q)) continue;
          auto w = g.image(g.edges[x][q], p);
          if (!w) continue;
          std::vector<Label> fit;
          for (const auto& z : cands) {
            auto zq = g.image(z, q);
            if (!zq || *zq == *w) fit.push_back(z);
          }
          if (fit.size() == 1) pick = fit[0];
        }
        if (pick) {
          g.set_edge(x, p, *pick);
          ++added;
          changed = true;
        }
      }
    }
  }
  return added;
}

struct EdgePatch {
  Label from;
  int prime;
  Label to;
};

struct SplitResult {
  PowerInfoGraph graph;
  std::vector<std::string> log;
};

// Replaces every label naming several classes ("34BC") by one label per letter, each inheriting
// the edges of the union. Edges into a split label must be redirected by a patch.
inline SplitResult split_labels(const PowerInfoGraph& g, const std::vector<EdgePatch>& patches) {
  validate(g);
  SplitResult r;
  std::set<Label> split;
  for (const auto& l : g.labels) {
    std::string letters = label_letters(l);
    if (letters.size() < 2) {
      r.graph.add_label(l);
      continue;
    }
    split.insert(l);
    std::string digits = std::to_string(label_order(l));
    std::string parts;
    for (char c : letters) {
      r.graph.add_label(digits + c);
      parts += (parts.empty() ? "" : ", ") + digits + c;
    }
    r.log.push_back("split " + l + " into " + parts);
  }
  for (const auto& l : g.labels) {
    std::vector<Label> targets;
    if (split.count(l))
      for (char c : label_letters(l)) targets.push_back(std::to_string(label_order(l)) + c);
    else
      targets.push_back(l);
    for (const auto& t : targets)
      for (const auto& [p, to] : g.edges.at(l))
        if (!split.count(to)) r.graph.set_edge(t, p, to);
  }
  for (const auto& pt : patches) {
    r.graph.set_edge(pt.from, pt.prime, pt.to);
    r.log.push_back("set " + pt.from + " ^" + std::to_string(pt.prime) + " = " + pt.to);
  }
  for (const auto& l : g.labels)
    for (const auto& [p, to] : g.edges.at(l)) {
      if (!split.count(to)) continue;
      std::vector<Label> sources;
      if (split.count(l))
        for (char c : label_letters(l)) sources.push_back(std::to_string(label_order(l)) + c);
      else
        sources.push_back(l);
      for (const auto& s : sources)
        if (!r.graph.image(s, p))
          fail(ErrorKind::label, "edge " + s + " ^" + std::to_string(p) + " into the split label " + to + " needs a patch");
    }
  return r;
}

struct LabelRoots {
  std::map<std::int64_t, int> total;
  std::map<std::int64_t, std::vector<Label>> labels;
};

// Labels whose iterated prime powers reach the given label, grouped by order; the label itself
// counts at its own order.
inline LabelRoots root_info_from_labels(const PowerInfoGraph& g, const Label& label) {
  if (!g.contains(label)) fail(ErrorKind::label, "unknown label '" + label + "'");
  LabelRoots r;
  std::set<Label> found{label};
  const std::int64_t o = label_order(label);
  r.total[o] = 1;
  r.labels[o] = {label};
  for (const auto& l : g.labels) {
    if (found.count(l)) continue;
    for (const auto& [p, to] : g.edges.at(l)) {
      if (!found.count(to)) continue;
      const std::int64_t lo = label_order(l);
      found.insert(l);
      r.total[lo] += 1;
      r.labels[lo].push_back(l);
      break;
    }
  }
  return r;
}

struct ClassRoots {
  std::map<std::int64_t, int> total;
  std::map<std::int64_t, std::vector<int>> classes;
};

// Classes i whose (orders[i] / orders[pos])-th power lies in class pos, grouped by order.
inline ClassRoots root_info_from_table(const table::TableHead& h, int pos) {
  if (pos < 0 || static_cast<std::size_t>(pos) >= h.ncls()) fail(ErrorKind::index, "class " + std::to_string(pos) + " out of range");
  if (!h.has_complete_powermaps()) fail(ErrorKind::incomplete_head, "root counts need all power maps");
  ClassRoots r;
  const std::int64_t po = h.orders[pos];
  for (std::size_t i = 0; i < h.ncls(); ++i) {
    const std::int64_t o = h.orders[i];
    if (o % po == 0 && table::class_of_power(h, static_cast<int>(i), o / po) == pos) {
      r.total[o] += 1;
      r.classes[o].push_back(static_cast<int>(i));
    }
  }
  return r;
}

}  // namespace chartab::classify
