#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "chartab/cyclo/cyclotomic.hpp"
#include "chartab/error.hpp"
#include "chartab/numbers.hpp"

namespace chartab::table {

using cyclo::Cyclotomic;
using ClassFunction = std::vector<Cyclotomic>;
using PowerMap = std::vector<int>;  // 0-based class indices

// Class 0 is the identity class. Power maps are keyed by prime.
struct TableHead {
  std::string identifier;
  BigInt size;
  std::vector<std::int64_t> orders;
  std::vector<BigInt> centralizers;
  std::map<int, PowerMap> powermaps;
  std::vector<std::string> names;

  std::size_t ncls() const { return orders.size(); }
  std::int64_t max_order() const { return orders.empty() ? 1 : *std::max_element(orders.begin(), orders.end()); }
  BigInt class_size(std::size_t i) const { return size / centralizers[i]; }

  std::vector<int> required_primes() const {
    std::vector<int> out;
    for (std::int64_t p = 2; p <= max_order(); ++p)
      if (is_prime(p)) out.push_back(static_cast<int>(p));
    return out;
  }
  bool has_complete_powermaps() const {
    for (int p : required_primes())
      if (!powermaps.count(p)) return false;
    return true;
  }

  friend bool operator==(const TableHead&, const TableHead&) = default;
};

namespace detail {
[[noreturn]] inline void violated(const std::string& rule, const std::string& detail) {
  fail(ErrorKind::validation, "head rule '" + rule + "' violated: " + detail);
}
}  // namespace detail

// Checks the structural invariants; each failure names the rule.
inline void validate(const TableHead& h, bool require_complete_powermaps = false) {
  const std::size_t n = h.ncls();
  if (n == 0) detail::violated("nonempty", "no classes");
  if (h.centralizers.size() != n) detail::violated("lengths", "centralizer list length differs from class count");
  if (!h.names.empty() && h.names.size() != n) detail::violated("lengths", "name list length differs from class count");
  if (h.orders[0] != 1) detail::violated("identity-first", "class 1 must have element order 1");
  if (h.centralizers[0] != h.size) detail::violated("identity-centralizer", "centralizer of class 1 must equal the group order");
  BigInt sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (h.orders[i] < 1) detail::violated("orders-positive", "class " + std::to_string(i + 1));
    if (i > 0 && h.orders[i] == 1) detail::violated("identity-unique", "class " + std::to_string(i + 1) + " has order 1");
    if (h.centralizers[i] <= 0 || h.size % h.centralizers[i] != 0)
      detail::violated("centralizer-divides-size", "class " + std::to_string(i + 1));
    if (h.centralizers[i] % h.orders[i] != 0) detail::violated("order-divides-centralizer", "class " + std::to_string(i + 1));
    sum += h.size / h.centralizers[i];
  }
  if (sum != h.size) detail::violated("class-size-sum", "class sizes sum to " + to_string(sum) + ", not " + to_string(h.size));
  for (const auto& [p, map] : h.powermaps) {
    if (!is_prime(p)) detail::violated("powermap-prime", std::to_string(p) + " is not prime");
    if (p > h.max_order()) detail::violated("powermap-prime", std::to_string(p) + " exceeds the maximal element order");
    if (map.size() != n) detail::violated("powermap-length", "map for " + std::to_string(p));
    for (std::size_t i = 0; i < n; ++i) {
      int j = map[i];
      if (j < 0 || static_cast<std::size_t>(j) >= n) detail::violated("powermap-range", "map for " + std::to_string(p));
      if (h.orders[j] != h.orders[i] / std::gcd(h.orders[i], static_cast<std::int64_t>(p)))
        detail::violated("powermap-order", "class " + std::to_string(i + 1) + " under " + std::to_string(p));
      if (h.centralizers[j] % h.centralizers[i] != 0)
        detail::violated("powermap-centralizer", "class " + std::to_string(i + 1) + " under " + std::to_string(p));
    }
  }
  if (require_complete_powermaps && !h.has_complete_powermaps()) detail::violated("powermaps-complete", "missing prime");
}

// Class of g^m for g in class i.
inline int class_of_power(const TableHead& h, int i, std::int64_t m) {
  std::int64_t r = mod_floor(m, h.orders.at(i));
  if (r == 0) return 0;
  int c = i;
  for (auto [p, e] : factorize(r)) {
    auto it = h.powermaps.find(static_cast<int>(p));
    if (it == h.powermaps.end()) fail(ErrorKind::incomplete_head, "power map for prime " + std::to_string(p) + " missing");
    for (int k = 0; k < e; ++k) c = it->second[c];
  }
  return c;
}

inline void check_length(const TableHead& h, const ClassFunction& x) {
  if (x.size() != h.ncls())
    fail(ErrorKind::head, "class function of length " + std::to_string(x.size()) + " on a head with " +
                              std::to_string(h.ncls()) + " classes");
}

inline Cyclotomic scalar_product(const TableHead& h, const ClassFunction& x, const ClassFunction& y) {
  check_length(h, x);
  check_length(h, y);
  Cyclotomic s;
  for (std::size_t i = 0; i < h.ncls(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    s += (x[i] * y[i].conj()).scaled(Rational(1) / Rational(h.centralizers[i]));
  }
  return s;
}

inline Cyclotomic norm(const TableHead& h, const ClassFunction& x) { return scalar_product(h, x, x); }

inline ClassFunction trivial_character(const TableHead& h) { return ClassFunction(h.ncls(), Cyclotomic(1)); }

inline ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline ClassFunction operator-(ClassFunction a, const ClassFunction& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline ClassFunction operator*(const Cyclotomic& c, ClassFunction a) {
  for (auto& x : a) x = c * x;
  return a;
}
inline ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}
inline bool is_zero(const ClassFunction& a) {
  return std::all_of(a.begin(), a.end(), [](const Cyclotomic& x) { return x.is_zero(); });
}

inline std::string key_of(const ClassFunction& a) {
  std::string k;
  for (const auto& x : a) k += x.str() + ";";
  return k;
}

// Drops exact duplicates, keeping the first occurrence.
inline std::vector<ClassFunction> deduplicate(const std::vector<ClassFunction>& xs) {
  std::vector<ClassFunction> out;
  std::map<std::string, bool> seen;
  for (const auto& x : xs)
    if (seen.emplace(key_of(x), true).second) out.push_back(x);
  return out;
}

struct CharacterTable {
  TableHead head;
  std::vector<ClassFunction> irr;
};

}  // namespace chartab::table
