#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "chartab/error.hpp"

namespace chartab {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& n, const BigInt& d) {
  if (d == 0) fail(ErrorKind::division, "zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigInt parse_bigint(const std::string& s) {
  BigInt r;
  if (s.empty() || r.set_str(s, 10) != 0) fail(ErrorKind::parse, "bad integer '" + s + "'");
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Trial division; inputs here are element orders and conductors.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod_floor(a, m);
  while (a1) {
    std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) fail(ErrorKind::domain, "not invertible modulo " + std::to_string(m));
  return mod_floor(x, m);
}

// Multiplicative order of a modulo n, gcd(a, n) = 1.
inline int multiplicative_order(std::int64_t a, std::int64_t n) {
  if (n == 1) return 1;
  if (std::gcd(mod_floor(a, n), n) != 1) fail(ErrorKind::domain, "order of non-unit");
  std::int64_t x = mod_floor(a, n);
  int d = 1;
  while (x != 1) {
    x = x * mod_floor(a, n) % n;
    ++d;
  }
  return d;
}

}  // namespace chartab
