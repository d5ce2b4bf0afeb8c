#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "chartab/ffmat/field.hpp"

// Dense univariate polynomials over a Field; coefficients low to high, no trailing zeros.
namespace chartab::ffmat::poly {

using Poly = std::vector<Elt>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

inline Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(r);
  return r;
}

inline Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly nb = b;
  for (auto& x : nb) x = f.neg(x);
  return add(f, a, nb);
}

inline Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(const Field& f, Poly a, const Poly& b) {
  if (b.empty()) fail(ErrorKind::division, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  Elt inv = f.inv(b.back());
  for (int d = degree(a); d >= degree(b); --d) {
    Elt c = f.mul(a[d], inv);
    q[d - degree(b)] = c;
    if (!c) continue;
    Elt nc = f.neg(c);
    for (std::size_t i = 0; i < b.size(); ++i) a[d - degree(b) + i] = f.add(a[d - degree(b) + i], f.mul(nc, b[i]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly mod(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

inline Poly monic(const Field& f, Poly a) {
  if (a.empty()) return a;
  Elt inv = f.inv(a.back());
  for (auto& x : a) x = f.mul(inv, x);
  return a;
}

inline Poly gcd(const Field& f, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

inline Poly derivative(const Field& f, const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i % f.p())), a[i]));
  trim(r);
  return r;
}

inline Poly mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) { return mod(f, mul(f, a, b), m); }

inline Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly r = mod(f, Poly{1}, m);
  base = mod(f, base, m);
  while (e) {
    if (e & 1) r = mulmod(f, r, base, m);
    e >>= 1;
    if (e) base = mulmod(f, base, base, m);
  }
  return r;
}

inline Poly x_poly() { return Poly{0, 1}; }

// p-th root of a polynomial whose derivative vanishes.
inline Poly pth_root(const Field& f, const Poly& a) {
  const int p = f.p();
  Poly r;
  // Coefficientwise c^(q/p) inverts the Frobenius on GF(q).
  std::uint64_t e = f.q() / static_cast<std::uint64_t>(p);
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(f.pow(a[i], e));
  trim(r);
  return r;
}

// Square-free decomposition: (factor, multiplicity) with pairwise coprime square-free factors.
inline std::vector<std::pair<Poly, int>> squarefree(const Field& f, const Poly& a0) {
  std::vector<std::pair<Poly, int>> out;
  Poly a = monic(f, a0);
  if (degree(a) <= 0) return out;
  Poly c = gcd(f, a, derivative(f, a));
  Poly w = divmod(f, a, c).first;
  int i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(f, w, c);
    Poly fac = divmod(f, w, y).first;
    if (degree(fac) > 0) out.emplace_back(fac, i);
    w = y;
    c = divmod(f, c, y).first;
    ++i;
  }
  if (degree(c) > 0) {
    for (auto& [g, m] : squarefree(f, pth_root(f, c))) out.emplace_back(g, m * f.p());
  }
  return out;
}

// Distinct-degree factorization of a monic square-free polynomial:
// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<Poly, int>> distinct_degree(const Field& f, Poly a) {
  std::vector<std::pair<Poly, int>> out;
  Poly h = x_poly();
  int d = 0;
  while (degree(a) > 0) {
    ++d;
    if (2 * d > degree(a)) {
      out.emplace_back(a, degree(a));
      break;
    }
    h = powmod(f, h, f.q(), a);
    Poly g = gcd(f, a, sub(f, h, x_poly()));
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      a = divmod(f, a, g).first;
      h = mod(f, h, a);
    }
  }
  return out;
}

}  // namespace chartab::ffmat::poly
