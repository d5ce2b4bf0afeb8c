#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chartab/classify/powerinfo.hpp"
#include "chartab/cyclo/cyclotomic.hpp"
#include "chartab/table/head.hpp"

namespace chartab::classify {

struct ClassInfo {
  std::int64_t order;
  BigInt centralizer;
  friend bool operator==(const ClassInfo&, const ClassInfo&) = default;
};

// Label -> (element order, centralizer order). Reassigning a different value is an error.
class AssignmentStore {
 public:
  void assign(const Label& l, std::int64_t order, const BigInt& centralizer) {
    if (label_order(l) != order)
      fail(ErrorKind::consistency, "label '" + l + "' assigned a class of element order " + std::to_string(order));
    if (centralizer <= 0 || centralizer % order != 0)
      fail(ErrorKind::consistency, "centralizer order " + to_string(centralizer) + " for '" + l + "'");
    auto [it, fresh] = info_.emplace(l, ClassInfo{order, centralizer});
    if (!fresh && it->second.centralizer != centralizer)
      fail(ErrorKind::consistency, "wrong centralizer order for '" + l + "': " + to_string(centralizer) + " after " +
                                       to_string(it->second.centralizer));
  }
  bool contains(const Label& l) const { return info_.count(l) > 0; }
  const ClassInfo& at(const Label& l) const {
    auto it = info_.find(l);
    if (it == info_.end()) fail(ErrorKind::label, "no assignment for '" + l + "'");
    return it->second;
  }
  const std::map<Label, ClassInfo>& all() const { return info_; }
  std::size_t size() const { return info_.size(); }

 private:
  std::map<Label, ClassInfo> info_;
};

namespace detail {

template <class T>
std::vector<T> difference(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<std::int64_t> proper_divisors_above_one(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace detail

struct CentralizerMatch {
  std::vector<std::pair<Label, int>> matched;  // in the order of identification
  std::vector<Label> unidentified_labels;
  std::vector<int> unidentified_classes;
};

// Matches the root labels of an element (from the power-info graph) with the root classes of the
// same element in the table of its normalizer. A label is matched when it is the only one left of
// its order, when it is a power of a matched label, or when exactly one remaining class powers
// onto a matched class. Orders whose remaining classes share one centralizer order are then
// assigned wholesale. Matched labels get their centralizer orders in the store.
inline CentralizerMatch identify_centralizer_orders(const table::TableHead& normtbl,
                                                const std::map<std::int64_t, std::vector<Label>>& root_labels,
                                                const std::map<std::int64_t, std::vector<int>>& root_classes,
                                                const PowerInfoGraph& graph, AssignmentStore& store) {
  if (root_labels.empty()) return {};
  for (const auto& [o, ls] : root_labels)
    if (!root_classes.count(o)) fail(ErrorKind::consistency, "no classes of order " + std::to_string(o) + " among the roots");
  const std::int64_t n = root_labels.begin()->first;
  std::vector<Label> id_labels;
  std::vector<int> id_classes;
  auto known_label = [&](const Label& l) { return std::find(id_labels.begin(), id_labels.end(), l) != id_labels.end(); };
  auto known_class = [&](int c) { return std::find(id_classes.begin(), id_classes.end(), c) != id_classes.end(); };
  auto add_powers = [&](const Label& l, int cls, std::int64_t i, bool& found) {
    for (std::int64_t d : detail::proper_divisors_above_one(i / n)) {
      Label pl = graph.power_label(l, d);
      if (!known_label(pl)) {
        id_labels.push_back(pl);
        id_classes.push_back(table::class_of_power(normtbl, cls, d));
        found = true;
      }
    }
  };

  bool found = true;
  while (found) {
    found = false;
    for (const auto& [i, rl] : root_labels) {
      const auto& rt = root_classes.at(i);
      std::vector<Label> unknown = detail::difference(rl, id_labels);
      if (unknown.size() == 1) {
        std::vector<int> left = detail::difference(rt, id_classes);
        if (left.empty()) fail(ErrorKind::consistency, "no class left for label '" + unknown[0] + "'");
        id_labels.push_back(unknown[0]);
        id_classes.push_back(left[0]);
        found = true;
        add_powers(unknown[0], left[0], i, found);
        continue;
      }
      for (std::int64_t d : detail::proper_divisors_above_one(i / n)) {
        std::vector<int> cand = detail::difference(rt, id_classes);
        std::vector<int> imgs;
        for (int c : cand) imgs.push_back(table::class_of_power(normtbl, c, d));
        std::set<int> hits;
        for (int im : imgs)
          if (known_class(im)) hits.insert(im);
        for (int im : hits) {
          if (std::count(imgs.begin(), imgs.end(), im) != 1) continue;
          int cls = cand[std::find(imgs.begin(), imgs.end(), im) - imgs.begin()];
          const Label& powerlabel = id_labels[std::find(id_classes.begin(), id_classes.end(), im) - id_classes.begin()];
          auto match = std::find_if(unknown.begin(), unknown.end(), [&](const Label& u) { return graph.power_label(u, d) == powerlabel; });
          if (match == unknown.end())
            fail(ErrorKind::consistency, "no label of order " + std::to_string(i) + " powers to '" + powerlabel + "'");
          id_labels.push_back(*match);
          id_classes.push_back(cls);
          add_powers(*match, cls, i, found);
          found = true;
          break;
        }
        if (found) break;
      }
    }
  }

  for (const auto& [i, rl] : root_labels) {
    std::vector<int> cand = detail::difference(root_classes.at(i), id_classes);
    std::set<BigInt> cent;
    for (int c : cand) cent.insert(normtbl.centralizers[c]);
    if (cent.size() != 1) continue;
    std::vector<Label> rest = detail::difference(rl, id_labels);
    if (rest.size() != cand.size())
      fail(ErrorKind::consistency, std::to_string(rest.size()) + " labels left for " + std::to_string(cand.size()) +
                                       " classes of order " + std::to_string(i));
    id_labels.insert(id_labels.end(), rest.begin(), rest.end());
    id_classes.insert(id_classes.end(), cand.begin(), cand.end());
  }

  for (std::size_t k = 0; k < id_labels.size(); ++k)
    store.assign(id_labels[k], normtbl.orders[id_classes[k]], normtbl.centralizers[id_classes[k]]);

  CentralizerMatch out;
  for (std::size_t k = 0; k < id_labels.size(); ++k) out.matched.emplace_back(id_labels[k], id_classes[k]);
  std::vector<Label> all_labels;
  std::vector<int> all_classes;
  for (const auto& [i, rl] : root_labels) all_labels.insert(all_labels.end(), rl.begin(), rl.end());
  for (const auto& [i, rt] : root_classes) all_classes.insert(all_classes.end(), rt.begin(), rt.end());
  out.unidentified_labels = detail::difference(all_labels, id_labels);
  out.unidentified_classes = detail::difference(all_classes, id_classes);
  return out;
}

// Classes with irrational values, their Galois partners and the integer d with sqrt(d) attached.
struct GaloisInfo {
  std::vector<Label> classes;
  std::vector<Label> partners;
  std::vector<std::int64_t> rootsof;

  cyclo::Cyclotomic irrat(std::size_t i) const { return cyclo::sqrt_int(rootsof.at(i)); }

  std::optional<std::size_t> position(const Label& l) const {
    auto it = std::find(classes.begin(), classes.end(), l);
    if (it == classes.end()) return std::nullopt;
    return static_cast<std::size_t>(it - classes.begin());
  }
};

inline void validate(const GaloisInfo& g) {
  if (g.partners.size() != g.classes.size() || g.rootsof.size() != g.classes.size())
    fail(ErrorKind::validation, "Galois info lists differ in length");
  for (std::size_t i = 0; i < g.classes.size(); ++i) {
    auto j = g.position(g.partners[i]);
    if (!j || g.partners[*j] != g.classes[i]) fail(ErrorKind::validation, "partner of '" + g.classes[i] + "' is not mutual");
    if (*j == i) fail(ErrorKind::validation, "'" + g.classes[i] + "' is its own partner");
    if (label_order(g.classes[i]) != label_order(g.partners[i]))
      fail(ErrorKind::validation, "partners '" + g.classes[i] + "' and '" + g.partners[i] + "' differ in order");
    if (g.rootsof[i] == 0) fail(ErrorKind::validation, "zero radicand for '" + g.classes[i] + "'");
    if (g.rootsof[*j] != g.rootsof[i]) fail(ErrorKind::validation, "partners '" + g.classes[i] + "' carry different irrationalities");
  }
}

// Head from the assigned labels, sorted by (order, label). The p-th power of a class of order
// divisible by p follows the graph; otherwise it is the class itself or, for a Galois class whose
// irrationality moves under p, its partner.
inline table::TableHead build_table_head(const AssignmentStore& assignments, const PowerInfoGraph& graph, const GaloisInfo& galois,
                                         const BigInt& group_size, const std::string& identifier = "") {
  validate(galois);
  std::vector<Label> names;
  for (const auto& [l, info] : assignments.all()) names.push_back(l);
  std::sort(names.begin(), names.end(), label_less);
  std::map<Label, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  auto idx = [&](const Label& l) {
    auto it = index.find(l);
    if (it == index.end()) fail(ErrorKind::construction, "label '" + l + "' has no assignment");
    return it->second;
  };

  table::TableHead h;
  h.identifier = identifier;
  h.size = group_size;
  h.names = names;
  for (const auto& l : names) {
    h.orders.push_back(assignments.at(l).order);
    h.centralizers.push_back(assignments.at(l).centralizer);
  }
  for (int p : h.required_primes()) {
    table::PowerMap map(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::int64_t o = h.orders[i];
      if (o == 1 || o == p) {
        map[i] = 0;
      } else if (o % p == 0) {
        auto img = graph.contains(names[i]) ? graph.image(names[i], p) : std::nullopt;
        if (!img) fail(ErrorKind::construction, "no " + std::to_string(p) + "-th power recorded for '" + names[i] + "'");
        map[i] = idx(*img);
      } else if (auto pos = galois.position(names[i])) {
        cyclo::Cyclotomic x = galois.irrat(*pos);
        map[i] = x.galois(p) != x ? idx(galois.partners[*pos]) : static_cast<int>(i);
      } else {
        map[i] = static_cast<int>(i);
      }
    }
    h.powermaps[p] = std::move(map);
  }
  try {
    table::validate(h, true);
  } catch (const Error& e) {
    fail(ErrorKind::construction, e.what());
  }
  if (!names.empty() && names[0] != "1A") fail(ErrorKind::construction, "first class is '" + names[0] + "', not '1A'");
  return h;
}

}  // namespace chartab::classify
