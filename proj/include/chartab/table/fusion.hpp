#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/table/characters.hpp"
#include "chartab/table/classmap.hpp"
#include "chartab/table/head.hpp"

namespace chartab::table {

inline ClassMap init_fusion(const TableHead& sub, const TableHead& big) {
  std::vector<ClassMap::Entry> entries;
  for (std::size_t i = 0; i < sub.ncls(); ++i) {
    ClassMap::Entry s;
    for (std::size_t j = 0; j < big.ncls(); ++j)
      if (big.orders[j] == sub.orders[i] && big.centralizers[j] % sub.centralizers[i] == 0) s.push_back(static_cast<int>(j));
    if (s.empty()) fail(ErrorKind::impossible_fusion, "no candidate image for class " + std::to_string(i + 1));
    entries.push_back(std::move(s));
  }
  return ClassMap(std::move(entries));
}

// Meets map o pow_p(sub) with pow_p(big) o map for every shared prime, to a fixpoint.
inline bool consistency_refine(const TableHead& sub, ClassMap& map, const TableHead& big) {
  if (map.size() != sub.ncls()) fail(ErrorKind::shape, "class map length differs from the subgroup class count");
  std::vector<ClassMap::Entry> e = map.entries();
  bool changed = true;
  auto intersect = [&](std::size_t i, const ClassMap::Entry& allowed) {
    ClassMap::Entry s;
    std::set_intersection(e[i].begin(), e[i].end(), allowed.begin(), allowed.end(), std::back_inserter(s));
    if (s.size() != e[i].size()) {
      e[i] = std::move(s);
      changed = true;
    }
    return !e[i].empty();
  };
  while (changed) {
    changed = false;
    for (const auto& [p, sp] : sub.powermaps) {
      auto it = big.powermaps.find(p);
      if (it == big.powermaps.end()) continue;
      const PowerMap& bp = it->second;
      for (std::size_t i = 0; i < sub.ncls(); ++i) {
        std::size_t ip = static_cast<std::size_t>(sp[i]);
        ClassMap::Entry forward;
        for (int j : e[i]) forward.push_back(bp[j]);
        std::sort(forward.begin(), forward.end());
        forward.erase(std::unique(forward.begin(), forward.end()), forward.end());
        if (!intersect(ip, forward)) {
          map = ClassMap(e);
          return false;
        }
        ClassMap::Entry back;
        for (int j : e[i])
          if (std::binary_search(e[ip].begin(), e[ip].end(), bp[j])) back.push_back(j);
        if (!intersect(i, back)) {
          map = ClassMap(e);
          return false;
        }
      }
    }
  }
  map = ClassMap(std::move(e));
  return true;
}

namespace detail {

inline bool nonnegative_integer(const Cyclotomic& c) { return c.is_integer() && c.integer() >= 0; }

// Restriction values if every entry of chi on the candidate sets agrees, else nullopt.
inline std::optional<ClassFunction> forced_restriction(const ClassFunction& chi, const ClassMap& map) {
  ClassFunction r;
  for (const auto& s : map.entries()) {
    const Cyclotomic& v = chi[s[0]];
    for (int j : s)
      if (chi[j] != v) return std::nullopt;
    r.push_back(v);
  }
  return r;
}

inline bool decomposes(const CharacterTable& sub, const ClassFunction& res) {
  for (const auto& phi : sub.irr)
    if (!nonnegative_integer(scalar_product(sub.head, res, phi))) return false;
  return true;
}

}  // namespace detail

// Depth-first search over refinements of the initial fusion. Branches are cut when a test character's
// restriction (once forced) does not decompose; complete maps must give induced characters with
// nonnegative integral scalar products.
inline std::vector<ClassMap> possible_class_fusions(const CharacterTable& sub, const TableHead& big,
                                                    const std::vector<ClassFunction>& test_chars,
                                                    std::optional<ClassMap> init = std::nullopt) {
  for (const auto& chi : test_chars) check_length(big, chi);
  ClassMap start = init_fusion(sub.head, big);
  if (init) start = meet_maps(start, *init);
  std::vector<ClassMap> out;
  std::function<void(ClassMap)> dfs = [&](ClassMap m) {
    if (!consistency_refine(sub.head, m, big)) return;
    for (const auto& chi : test_chars) {
      auto res = detail::forced_restriction(chi, m);
      if (res && !detail::decomposes(sub, *res)) return;
    }
    if (m.is_determined()) {
      auto ind = induced_by_fusion(sub.head, big, sub.irr, m);
      for (std::size_t a = 0; a < ind.size(); ++a)
        for (std::size_t b = a; b < ind.size(); ++b)
          if (!detail::nonnegative_integer(scalar_product(big, ind[a], ind[b]))) return;
      out.push_back(std::move(m));
      return;
    }
    std::size_t pick = m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i].size() > 1 && (pick == m.size() || m[i].size() < m[pick].size())) pick = i;
    for (int j : m[pick]) {
      ClassMap next = m;
      next.set(pick, {j});
      dfs(std::move(next));
    }
  };
  dfs(start);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// (x^p - y) / p has integral coordinates in the integral basis of the cyclotomic field.
inline bool congruent_power(const Cyclotomic& x, const Cyclotomic& y, int p) {
  Cyclotomic xp(1);
  for (int k = 0; k < p; ++k) xp *= x;
  Cyclotomic d = xp - y;
  for (const auto& [e, c] : d.terms())
    if (c.get_den() != 1 || c.get_num() % p != 0) return false;
  return true;
}

}  // namespace detail

// Candidate p-th power maps. Each class is constrained independently by element orders, centralizer
// divisibility, the optional initial approximation and, given irreducibles, the Galois action on
// p'-classes and the congruence chi(g)^p = chi(g^p) mod p. Complete maps must commute with the
// head's other power maps and permute the p'-classes; given irreducibles, each class function
// g -> chi(g^p) must also decompose into them with integral multiplicities.
inline std::vector<ClassMap> possible_power_maps(const TableHead& h, int p, const std::optional<ClassMap>& init = std::nullopt,
                                                 const std::vector<ClassFunction>& irr = {}) {
  if (!is_prime(p)) fail(ErrorKind::domain, std::to_string(p) + " is not prime");
  if (init && init->size() != h.ncls()) fail(ErrorKind::shape, "initial power map length differs from the class count");
  for (const auto& chi : irr) check_length(h, chi);
  std::vector<ClassMap::Entry> cand(h.ncls());
  for (std::size_t i = 0; i < h.ncls(); ++i) {
    const std::int64_t o = h.orders[i];
    const std::int64_t target = o / std::gcd(o, static_cast<std::int64_t>(p));
    for (std::size_t j = 0; j < h.ncls(); ++j) {
      if (h.orders[j] != target || h.centralizers[j] % h.centralizers[i] != 0) continue;
      if (init && !std::binary_search((*init)[i].begin(), (*init)[i].end(), static_cast<int>(j))) continue;
      bool ok = true;
      for (const auto& chi : irr) {
        if (o % p != 0 ? chi[j] != chi[i].galois(p) : !detail::congruent_power(chi[i], chi[j], p)) {
          ok = false;
          break;
        }
      }
      if (ok) cand[i].push_back(static_cast<int>(j));
    }
    if (cand[i].empty()) return {};
  }
  std::vector<ClassMap> out;
  for (const auto& m : contained_maps(ClassMap(cand))) {
    bool ok = true;
    std::vector<bool> hit(h.ncls(), false);
    for (std::size_t i = 0; i < h.ncls() && ok; ++i) {
      if (h.orders[i] % p != 0) {
        if (hit[m[i]]) ok = false;
        hit[m[i]] = true;
      }
      for (const auto& [q, qm] : h.powermaps)
        if (q != p && qm[m[i]] != m[qm[i]]) ok = false;
    }
    for (std::size_t a = 0; a < irr.size() && ok; ++a) {
      ClassFunction adams = restrict_character(irr[a], m);
      for (const auto& chi : irr)
        if (!scalar_product(h, adams, chi).is_integer()) {
          ok = false;
          break;
        }
    }
    if (ok) out.push_back(ClassMap::from_determined(m));
  }
  return out;
}

}  // namespace chartab::table
