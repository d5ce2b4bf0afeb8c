#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "chartab/cyclo/cyclotomic.hpp"
#include "chartab/ffmat/linalg.hpp"
#include "chartab/ffmat/poly.hpp"

namespace chartab::ffmat {

namespace detail {

// Minimal polynomial of v under right multiplication by m, together with the
// Krylov vectors v, vm, vm^2, ... that were linearly independent.
inline std::pair<poly::Poly, std::vector<FFVector>> local_minpoly(const FFVector& v, const FFMatrix& m) {
  const Field& f = m.field();
  std::vector<FFVector> vecs, krylov;
  std::vector<poly::Poly> coefs;
  std::vector<std::size_t> leads;
  FFVector u = v;
  for (std::size_t j = 0;; ++j) {
    FFVector w = u;
    poly::Poly c(j + 1, 0);
    c[j] = 1;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      Elt x = w[leads[i]];
      if (!x) continue;
      Elt nx = f.neg(x);
      w.add_scaled(vecs[i], nx);
      poly::Poly s = coefs[i];
      for (auto& e : s) e = f.mul(nx, e);
      c = poly::add(f, c, s);
    }
    if (w.is_zero()) return {poly::monic(f, c), krylov};
    krylov.push_back(u);
    std::size_t l = w.leading();
    Elt inv = f.inv(w[l]);
    for (auto& e : c) e = f.mul(inv, e);
    vecs.push_back(w.scaled(inv));
    coefs.push_back(c);
    leads.push_back(l);
    u = u * m;
  }
}

inline const std::vector<std::uint64_t>& primes_up_to(std::uint64_t cap) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::uint64_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(cap);
  if (it != cache.end()) return it->second;
  std::vector<bool> composite(cap + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= cap; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= cap; j += i) composite[j] = true;
  }
  return cache.emplace(cap, std::move(primes)).first->second;
}

inline poly::Poly power_chain(const Field& f, poly::Poly base, const std::vector<std::pair<std::uint64_t, int>>& fac,
                              std::size_t skip, const poly::Poly& g) {
  for (std::size_t i = 0; i < fac.size(); ++i) {
    if (i == skip) continue;
    for (int a = 0; a < fac[i].second; ++a) base = poly::powmod(f, base, fac[i].first, g);
  }
  return base;
}

// Order of x modulo a square-free g whose irreducible factors all have degree d.
inline std::uint64_t order_mod(const Field& f, const poly::Poly& g, int d, std::uint64_t cap) {
  const std::uint64_t q = f.q();
  std::vector<std::pair<std::uint64_t, int>> fac;
  for (std::uint64_t r : primes_up_to(cap)) {
    if (r == static_cast<std::uint64_t>(f.p())) continue;
    if (powmod_u64(q % r, static_cast<std::uint64_t>(d), r) != 1) continue;
    int a = 1;
    std::uint64_t ra = r;
    while (ra <= cap / r && powmod_u64(q % (ra * r), static_cast<std::uint64_t>(d), ra * r) == 1) {
      ra *= r;
      ++a;
    }
    fac.emplace_back(r, a);
  }
  const poly::Poly x = poly::mod(f, poly::x_poly(), g);
  if (!poly::is_one(power_chain(f, x, fac, fac.size(), g))) fail(ErrorKind::cap_exceeded, "element order exceeds cap");
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < fac.size(); ++i) {
    poly::Poly z = power_chain(f, x, fac, i, g);
    int b = 0;
    while (!poly::is_one(z)) {
      z = poly::powmod(f, z, fac[i].first, g);
      ++b;
    }
    for (int k = 0; k < b; ++k) order *= fac[i].first;
    if (order > cap) fail(ErrorKind::cap_exceeded, "element order exceeds cap");
  }
  return order;
}

}  // namespace detail

inline poly::Poly minimal_polynomial(const FFMatrix& m) {
  if (!m.square()) fail(ErrorKind::shape, "minimal polynomial of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  EchelonSpace span(f, n);
  poly::Poly mu{1};
  for (std::size_t i = 0; i < n && span.dim() < n; ++i) {
    FFVector e = FFVector::unit(f, n, i);
    if (span.contains(e)) continue;
    auto [local, krylov] = detail::local_minpoly(e, m);
    for (const auto& v : krylov) span.add(v);
    poly::Poly g = poly::gcd(f, mu, local);
    mu = poly::monic(f, poly::divmod(f, poly::mul(f, mu, local), g).first);
  }
  return mu;
}

inline constexpr std::uint64_t default_order_cap = 1000000;

inline std::uint64_t element_order(const FFMatrix& m, std::uint64_t cap = default_order_cap) {
  if (!m.square()) fail(ErrorKind::shape, "element order of a non-square matrix");
  if (rank(m) != m.rows()) fail(ErrorKind::singular, "element order of a singular matrix");
  const Field& f = m.field();
  if (m.rows() == 0) return 1;
  poly::Poly mu = minimal_polynomial(m);
  std::uint64_t order = 1;
  int max_mult = 1;
  for (auto& [part, mult] : poly::squarefree(f, mu)) {
    max_mult = std::max(max_mult, mult);
    for (auto& [g, d] : poly::distinct_degree(f, part)) {
      std::uint64_t o = detail::order_mod(f, g, d, cap);
      order = std::lcm(order, o);
      if (order > cap) fail(ErrorKind::cap_exceeded, "element order exceeds cap");
    }
  }
  std::uint64_t pp = 1;
  while (pp < static_cast<std::uint64_t>(max_mult)) pp *= static_cast<std::uint64_t>(f.p());
  if (order > cap / pp) fail(ErrorKind::cap_exceeded, "element order exceeds cap");
  order *= pp;
  if (!power(m, static_cast<std::int64_t>(order)).is_identity())
    fail(ErrorKind::consistency, "element order cross-check failed");
  return order;
}

inline constexpr int default_brauer_bound = 120;

inline cyclo::Cyclotomic brauer_character_value(const FFMatrix& m, int bound = default_brauer_bound) {
  const Field& f = m.field();
  if (!f.is_prime()) fail(ErrorKind::field, "Brauer values need a prime field");
  std::uint64_t n = element_order(m);
  if (n > static_cast<std::uint64_t>(bound)) fail(ErrorKind::cap_exceeded, "element order above the Brauer bound");
  if (n % static_cast<std::uint64_t>(f.p()) == 0) fail(ErrorKind::p_singular, "element order divisible by p");
  int d = multiplicative_order(f.p(), static_cast<std::int64_t>(n));
  if (d > 12) fail(ErrorKind::field, "eigenvalues need GF(p^" + std::to_string(d) + ")");
  const Field& ext = field(f.p(), d);
  const Elt omega = ext.pow(ext.generator(), (ext.q() - 1) / n);
  const FFMatrix me = m.embed(ext);
  const std::size_t dim = m.rows();
  std::vector<Rational> coeffs(n);
  std::size_t seen = 0;
  Elt lambda = 1;
  for (std::uint64_t i = 0; i < n && seen < dim; ++i, lambda = ext.mul(lambda, omega)) {
    std::size_t mult = dim - rank(me - FFMatrix::identity(ext, dim).scaled(lambda));
    coeffs[i] = static_cast<long>(mult);
    seen += mult;
  }
  return cyclo::Cyclotomic::from_dense(static_cast<int>(n), std::move(coeffs));
}

}  // namespace chartab::ffmat
