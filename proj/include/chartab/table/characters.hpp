#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/table/classmap.hpp"
#include "chartab/table/head.hpp"
#include "chartab/table/sn_tables.hpp"

namespace chartab::table {

inline void check_fusion(const TableHead& sub, const TableHead& big, const std::vector<int>& map) {
  if (map.size() != sub.ncls()) fail(ErrorKind::map, "fusion length differs from subgroup class count");
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0 || static_cast<std::size_t>(map[i]) >= big.ncls()) fail(ErrorKind::map, "fusion value out of range");
    if (sub.orders[i] != big.orders[map[i]])
      fail(ErrorKind::map, "fusion does not preserve the element order of class " + std::to_string(i + 1));
  }
}

inline ClassFunction restrict_character(const ClassFunction& chi, const std::vector<int>& map) {
  ClassFunction r;
  for (int j : map) r.push_back(chi.at(j));
  return r;
}

inline std::vector<ClassFunction> induced_by_fusion(const TableHead& sub, const TableHead& big,
                                                    const std::vector<ClassFunction>& chars, const ClassMap& fusion) {
  std::vector<int> map = fusion.determined();
  check_fusion(sub, big, map);
  std::vector<ClassFunction> out;
  for (const auto& chi : chars) {
    check_length(sub, chi);
    ClassFunction ind(big.ncls());
    for (std::size_t j = 0; j < sub.ncls(); ++j)
      if (!chi[j].is_zero()) ind[map[j]] += chi[j].scaled(Rational(1) / Rational(sub.centralizers[j]));
    for (std::size_t c = 0; c < big.ncls(); ++c) ind[c] = ind[c].scaled(Rational(big.centralizers[c]));
    out.push_back(std::move(ind));
  }
  return out;
}

// Characters induced from the cyclic subgroups generated by the listed classes, one per exponent k
// of the linear character g -> E(n)^k.
inline std::vector<ClassFunction> induced_cyclic(const TableHead& h, const std::vector<int>& classes,
                                                 const std::vector<std::int64_t>& exponents) {
  std::vector<ClassFunction> out;
  for (int i : classes) {
    if (i < 0 || static_cast<std::size_t>(i) >= h.ncls()) fail(ErrorKind::index, "class index out of range");
    const std::int64_t n = h.orders[i];
    std::vector<int> pw(n);
    for (std::int64_t m = 0; m < n; ++m) pw[m] = class_of_power(h, i, m);
    for (std::int64_t k : exponents) {
      std::vector<std::vector<Rational>> dense(h.ncls());
      for (std::int64_t m = 0; m < n; ++m) {
        auto& d = dense[pw[m]];
        if (d.empty()) d.resize(n);
        d[mod_floor(k * m, n)] += 1;
      }
      ClassFunction chi(h.ncls());
      for (std::size_t c = 0; c < h.ncls(); ++c)
        if (!dense[c].empty())
          chi[c] = Cyclotomic::from_dense(static_cast<int>(n), dense[c]).scaled(Rational(h.centralizers[c]) / Rational(n));
      out.push_back(std::move(chi));
    }
  }
  return deduplicate(out);
}

// All nontrivial exponents k = 1..n-1 for each class.
inline std::vector<ClassFunction> induced_cyclic(const TableHead& h, const std::vector<int>& classes) {
  std::vector<ClassFunction> out;
  for (int i : classes) {
    if (i < 0 || static_cast<std::size_t>(i) >= h.ncls()) fail(ErrorKind::index, "class index out of range");
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k < h.orders[i]; ++k) ks.push_back(k);
    auto part = induced_cyclic(h, {i}, ks);
    out.insert(out.end(), part.begin(), part.end());
  }
  return deduplicate(out);
}

inline const SymmetricTable& symmetric_table(int n) {
  for (const auto& t : symmetric_tables())
    if (t.n == n) return t;
  fail(ErrorKind::domain, "symmetrizations are available for n = 2..5, not " + std::to_string(n));
}

// For each character and each partition of n (in the table's partition order), the Frobenius symmetrization.
inline std::vector<ClassFunction> symmetrizations(const TableHead& h, const std::vector<ClassFunction>& chars, int n) {
  const SymmetricTable& t = symmetric_table(n);
  std::vector<Rational> inv_z;
  for (const auto& mu : t.partitions) {
    std::map<int, int> mult;
    for (int part : mu) ++mult[part];
    BigInt z = 1;
    for (auto [part, a] : mult) {
      for (int j = 0; j < a; ++j) z *= part;
      for (int j = 2; j <= a; ++j) z *= j;
    }
    inv_z.push_back(Rational(1) / Rational(z));
  }
  std::vector<std::vector<int>> power_class(h.ncls(), std::vector<int>(n + 1));
  for (std::size_t c = 0; c < h.ncls(); ++c)
    for (int r = 1; r <= n; ++r) power_class[c][r] = class_of_power(h, static_cast<int>(c), r);
  std::vector<ClassFunction> out;
  for (const auto& chi : chars) {
    check_length(h, chi);
    // products[m][c] = prod_i chi(g^{mu_i}) for cycle type m.
    std::vector<ClassFunction> products(t.partitions.size(), ClassFunction(h.ncls()));
    for (std::size_t m = 0; m < t.partitions.size(); ++m)
      for (std::size_t c = 0; c < h.ncls(); ++c) {
        Cyclotomic p(1);
        for (int part : t.partitions[m]) p *= chi[power_class[c][part]];
        products[m][c] = p;
      }
    for (std::size_t l = 0; l < t.partitions.size(); ++l) {
      ClassFunction s(h.ncls());
      for (std::size_t m = 0; m < t.partitions.size(); ++m) {
        if (t.values[l][m] == 0) continue;
        Rational coef = inv_z[m] * t.values[l][m];
        for (std::size_t c = 0; c < h.ncls(); ++c) s[c] += products[m][c].scaled(coef);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

struct Reduction {
  std::vector<ClassFunction> irreducibles;  // newly found
  std::vector<ClassFunction> remainders;
};

inline bool is_one(const Cyclotomic& x) { return x == Cyclotomic(1); }

// Norm-1 vector with nonzero rational degree, negated if the degree is negative.
inline bool as_irreducible(const TableHead& h, ClassFunction& v) {
  if (!is_one(norm(h, v)) || !v[0].is_rational() || v[0].is_zero()) return false;
  if (v[0].rational() < 0) v = Cyclotomic(-1) * v;
  return true;
}

inline ClassFunction project_out(const TableHead& h, ClassFunction v, const std::vector<ClassFunction>& irr) {
  for (const auto& chi : irr) {
    Cyclotomic c = scalar_product(h, v, chi);
    if (!c.is_zero()) v = v - c * chi;
  }
  return v;
}

inline Reduction reduced(const TableHead& h, const std::vector<ClassFunction>& irreducibles,
                         const std::vector<ClassFunction>& virtuals) {
  for (const auto& chi : irreducibles)
    if (!is_one(norm(h, chi))) fail(ErrorKind::precondition, "known irreducible without norm 1");
  std::vector<ClassFunction> known = irreducibles, pending = virtuals;
  Reduction r;
  bool found = true;
  while (found) {
    found = false;
    std::vector<ClassFunction> next;
    for (auto& v : pending) {
      v = project_out(h, v, known);
      if (is_zero(v)) continue;
      if (as_irreducible(h, v)) {
        known.push_back(v);
        r.irreducibles.push_back(v);
        found = true;
        continue;
      }
      next.push_back(std::move(v));
    }
    pending = std::move(next);
  }
  r.remainders = deduplicate(pending);
  return r;
}

}  // namespace chartab::table
