#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/table/characters.hpp"
#include "chartab/table/fusion.hpp"
#include "chartab/table/head.hpp"
#include "chartab/table/lattice.hpp"

namespace chartab::table {

using PartialCharacter = std::vector<std::optional<BigInt>>;

// Fills the missing rational integer values from their residues at p-th powers, p in primes.
// The bound must be certified: no missing value can exceed it in absolute value without the norm
// passing target_norm, and the window [-bound, bound] holds at most one value per residue class.
inline ClassFunction complete_by_congruences(const TableHead& h, const PartialCharacter& chi, const std::vector<int>& primes,
                                             const BigInt& bound, const BigInt& target_norm = 1) {
  if (chi.size() != h.ncls()) fail(ErrorKind::head, "partial character length differs from the class count");
  if (primes.empty()) fail(ErrorKind::under_determined, "no primes given");
  BigInt modulus = 1;
  for (int p : primes) {
    if (!is_prime(p)) fail(ErrorKind::domain, std::to_string(p) + " is not prime");
    modulus *= p;
  }
  BigInt known = 0;
  std::optional<BigInt> min_missing;
  for (std::size_t i = 0; i < h.ncls(); ++i) {
    if (chi[i]) {
      known += *chi[i] * *chi[i] * h.class_size(i);
    } else {
      BigInt s = h.class_size(i);
      if (!min_missing || s < *min_missing) min_missing = s;
    }
  }
  ClassFunction out(h.ncls());
  if (!min_missing) {
    for (std::size_t i = 0; i < h.ncls(); ++i) out[i] = Cyclotomic(*chi[i]);
    return out;
  }
  if (known + (bound + 1) * (bound + 1) * *min_missing <= h.size * target_norm)
    fail(ErrorKind::under_determined, "norm budget does not certify the bound " + to_string(bound));
  if (2 * bound + 1 > modulus)
    fail(ErrorKind::under_determined, "bound " + to_string(bound) + " exceeds the window of the modulus " + to_string(modulus));
  for (std::size_t i = 0; i < h.ncls(); ++i) {
    if (chi[i]) {
      out[i] = Cyclotomic(*chi[i]);
      continue;
    }
    // CRT: combine residues one prime at a time.
    BigInt r = 0, m = 1;
    for (int p : primes) {
      int j = class_of_power(h, static_cast<int>(i), p);
      if (!chi[j])
        fail(ErrorKind::precondition, "value at the " + std::to_string(p) + "-th power of class " + std::to_string(i + 1) + " is missing");
      BigInt a = *chi[j] - r;
      BigInt inv;
      BigInt pp = p;
      mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t());
      BigInt t = a * inv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t());
      r += m * t;
      m *= p;
    }
    BigInt v = r;
    if (v > bound) v -= modulus;
    if (v < -bound) fail(ErrorKind::inconsistency, "residue at class " + std::to_string(i + 1) + " has no representative within the bound");
    out[i] = Cyclotomic(v);
  }
  return out;
}

struct OrthogonalityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline OrthogonalityReport verify_orthogonality(const CharacterTable& t) {
  OrthogonalityReport r;
  const TableHead& h = t.head;
  auto add = [&](std::string s) { r.violations.push_back(std::move(s)); };
  for (const auto& chi : t.irr)
    if (chi.size() != h.ncls()) {
      add("character of length " + std::to_string(chi.size()));
      return r;
    }
  if (t.irr.size() != h.ncls()) add("count " + std::to_string(t.irr.size()) + " differs from class count " + std::to_string(h.ncls()));
  BigInt degsum = 0;
  for (std::size_t a = 0; a < t.irr.size(); ++a) {
    const Cyclotomic& d = t.irr[a][0];
    if (!d.is_integer() || d.integer() <= 0) add("character " + std::to_string(a + 1) + " has degree " + d.str());
    else degsum += d.integer() * d.integer();
    Cyclotomic nrm = norm(h, t.irr[a]);
    if (nrm != Cyclotomic(1)) add("character " + std::to_string(a + 1) + " has norm " + nrm.str());
    for (std::size_t b = a + 1; b < t.irr.size(); ++b) {
      Cyclotomic s = scalar_product(h, t.irr[a], t.irr[b]);
      if (!s.is_zero()) add("characters " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " have scalar product " + s.str());
    }
  }
  if (degsum != h.size) add("squared degrees sum to " + to_string(degsum) + ", not " + to_string(h.size));
  for (std::size_t i = 0; i < h.ncls(); ++i)
    for (std::size_t j = i; j < h.ncls(); ++j) {
      Cyclotomic s;
      for (const auto& chi : t.irr) s += chi[i] * chi[j].conj();
      Cyclotomic want = i == j ? Cyclotomic(h.centralizers[i]) : Cyclotomic();
      if (s != want)
        add("columns " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " give " + s.str() + ", expected " + want.str());
    }
  return r;
}

// Per factor class: whether its preimage splits into two classes, and the order of the first preimage.
// An empty order list means: odd order o gives o, a split class of even order o gives o, and a
// non-split class of even order o gives 2o.
struct ExtensionData {
  std::vector<bool> split;
  std::vector<std::int64_t> preimage_orders;
};

// Table of a central extension 2.F from the table of F and the values of one faithful irreducible.
// Preimages of F-class c are listed as c+ then (if split) c-, with c- = z c+.
inline CharacterTable build_central_extension_table(const CharacterTable& factor, const ExtensionData& data,
                                                    const ClassFunction& faithful) {
  const TableHead& f = factor.head;
  const std::size_t n = f.ncls();
  check_length(f, faithful);
  if (!data.split.empty() && data.split.size() != n) fail(ErrorKind::shape, "split flags length differs from the class count");
  if (!data.preimage_orders.empty() && data.preimage_orders.size() != n)
    fail(ErrorKind::shape, "preimage order list length differs from the class count");

  CharacterTable t;
  TableHead& h = t.head;
  h.identifier = "2." + f.identifier;
  h.size = 2 * f.size;
  std::vector<int> plus(n), minus(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::int64_t o = f.orders[c];
    const bool split = !faithful[c].is_zero() || (!data.split.empty() && data.split[c]) || o % 2 == 1;
    std::int64_t op = !data.preimage_orders.empty() ? data.preimage_orders[c] : (o % 2 == 1 || split ? o : 2 * o);
    if (op != o && op != 2 * o) fail(ErrorKind::construction, "preimage order of class " + std::to_string(c + 1) + " must be o or 2o");
    if (!split && faithful[c] != Cyclotomic())
      fail(ErrorKind::construction, "faithful value must vanish on the non-split class " + std::to_string(c + 1));
    plus[c] = static_cast<int>(h.orders.size());
    h.orders.push_back(op);
    h.centralizers.push_back(split ? 2 * f.centralizers[c] : f.centralizers[c]);
    if (!f.names.empty()) h.names.push_back(f.names[c] + (split ? "+" : ""));
    if (split) {
      minus[c] = static_cast<int>(h.orders.size());
      h.orders.push_back(o % 2 == 1 ? (op == o ? 2 * o : o) : op);
      h.centralizers.push_back(2 * f.centralizers[c]);
      if (!f.names.empty()) h.names.push_back(f.names[c] + "-");
    } else {
      minus[c] = -1;
    }
  }
  const std::size_t m = h.ncls();
  auto inflate = [&](const ClassFunction& chi) {
    ClassFunction r(m);
    for (std::size_t c = 0; c < n; ++c) {
      r[plus[c]] = chi[c];
      if (minus[c] >= 0) r[minus[c]] = chi[c];
    }
    return r;
  };
  ClassFunction lifted(m);
  for (std::size_t c = 0; c < n; ++c) {
    lifted[plus[c]] = faithful[c];
    if (minus[c] >= 0) lifted[minus[c]] = -faithful[c];
  }
  std::vector<ClassFunction> faithful_part;
  for (const auto& chi : factor.irr) {
    check_length(f, chi);
    t.irr.push_back(inflate(chi));
    faithful_part.push_back(tensor(lifted, t.irr.back()));
  }
  for (auto& psi : deduplicate(faithful_part)) {
    if (norm(h, psi) != Cyclotomic(1)) fail(ErrorKind::construction, "a faithful tensor product is reducible");
    if (psi[0].is_rational() && psi[0].rational() < 0) psi = Cyclotomic(-1) * psi;
    t.irr.push_back(std::move(psi));
  }
  BigInt degsum = 0;
  for (const auto& chi : t.irr) {
    if (!chi[0].is_integer()) fail(ErrorKind::construction, "non-integral degree " + chi[0].str());
    degsum += chi[0].integer() * chi[0].integer();
  }
  if (degsum != h.size) fail(ErrorKind::construction, "squared degrees sum to " + to_string(degsum) + ", not " + to_string(h.size));
  if (t.irr.size() != m)
    fail(ErrorKind::construction, std::to_string(t.irr.size()) + " irreducibles for " + std::to_string(m) + " classes");

  for (int p : h.required_primes()) {
    std::vector<ClassMap::Entry> init(m);
    for (std::size_t c = 0; c < n; ++c) {
      int img = class_of_power(f, static_cast<int>(c), p);
      ClassMap::Entry e{plus[img]};
      if (minus[img] >= 0) e.push_back(minus[img]);
      init[plus[c]] = e;
      if (minus[c] >= 0) init[minus[c]] = e;
    }
    auto maps = possible_power_maps(h, p, ClassMap(init), t.irr);
    if (maps.size() != 1)
      fail(ErrorKind::construction, std::to_string(maps.size()) + " candidate power maps for the prime " + std::to_string(p));
    h.powermaps[p] = maps[0].determined();
  }
  validate(h, true);
  return t;
}

inline constexpr int default_extension_rounds = 4;

// Irreducibles from a head with complete power maps: the trivial character and the characters induced
// from cyclic subgroups, reduced and LLL-reduced, then extended by tensor products and symmetric and
// antisymmetric squares of the irreducibles and the remaining virtual characters.
inline std::vector<ClassFunction> irreducibles_from_head(const TableHead& h, const Rational& delta,
                                                         int rounds = default_extension_rounds) {
  std::vector<int> classes;
  for (std::size_t i = 1; i < h.ncls(); ++i) classes.push_back(static_cast<int>(i));
  std::vector<ClassFunction> irr{trivial_character(h)};
  std::vector<ClassFunction> pending = induced_cyclic(h, classes);
  for (int round = 0; round <= rounds && irr.size() < h.ncls(); ++round) {
    if (round > 0) {
      std::vector<ClassFunction> base = irr;
      base.insert(base.end(), pending.begin(), pending.end());
      std::vector<ClassFunction> fresh;
      for (std::size_t a = 0; a < base.size(); ++a)
        for (std::size_t b = a; b < base.size(); ++b) fresh.push_back(tensor(base[a], base[b]));
      auto sq = symmetrizations(h, base, 2);
      fresh.insert(fresh.end(), sq.begin(), sq.end());
      pending.insert(pending.end(), fresh.begin(), fresh.end());
    }
    Reduction red = reduced(h, irr, pending);
    irr.insert(irr.end(), red.irreducibles.begin(), red.irreducibles.end());
    pending = red.remainders;
    if (pending.empty()) continue;
    LllCharacters lll = lll_characters(h, pending, delta);
    irr.insert(irr.end(), lll.irreducibles.begin(), lll.irreducibles.end());
    pending = lll.remainders;
  }
  return deduplicate(irr);
}

}  // namespace chartab::table
