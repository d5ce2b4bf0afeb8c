#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "chartab/numbers.hpp"

namespace chartab::cyclo {

// Element of Q(zeta_n) in the Zumbroich basis at minimal conductor.
// A basis exponent k is described by its components j_q = k * (n/q)^-1 mod q
// for each prime power q exactly dividing n; for odd p the top base-p digit of
// j_q lies in 1..p-1, for p = 2 it is 0.
class Cyclotomic {
 public:
  using Term = std::pair<int, Rational>;

  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}   // NOLINT
  Cyclotomic(const BigInt& v) : Cyclotomic(Rational(v)) {}  // NOLINT
  Cyclotomic(const Rational& v) {                           // NOLINT
    if (v != 0) terms_.emplace_back(0, v);
    if (!terms_.empty()) terms_[0].second.canonicalize();
  }

  // Builds from coefficients of zeta_n^k, k = 0..n-1 (not necessarily basis).
  static Cyclotomic from_dense(int n, std::vector<Rational> c);

  static Cyclotomic root_of_unity(int n, std::int64_t k) {
    if (n <= 0) fail(ErrorKind::domain, "root of unity needs n >= 1");
    std::vector<Rational> c(n);
    c[mod_floor(k, n)] = 1;
    return from_dense(n, std::move(c));
  }

  int conductor() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return n_ == 1; }
  Rational rational() const {
    if (n_ != 1) fail(ErrorKind::domain, "cyclotomic is not rational");
    return terms_.empty() ? Rational(0) : terms_[0].second;
  }
  bool is_integer() const { return n_ == 1 && (terms_.empty() || terms_[0].second.get_den() == 1); }
  BigInt integer() const {
    if (!is_integer()) fail(ErrorKind::domain, "cyclotomic is not an integer");
    return terms_.empty() ? BigInt(0) : terms_[0].second.get_num();
  }

  std::vector<Rational> dense(int m) const {
    std::vector<Rational> c(m);
    int s = m / n_;
    for (const auto& [k, v] : terms_) c[(static_cast<std::int64_t>(k) * s) % m] += v;
    return c;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_ && a.n_ == 1) return Cyclotomic(a.rational() + b.rational());
    int m = std::lcm(a.n_, b.n_);
    std::vector<Rational> c = a.dense(m);
    int s = m / b.n_;
    for (const auto& [k, v] : b.terms_) c[(static_cast<std::int64_t>(k) * s) % m] += v;
    return from_dense(m, std::move(c));
  }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return Cyclotomic();
    if (b.n_ == 1) return a.scaled(b.terms_[0].second);
    if (a.n_ == 1) return b.scaled(a.terms_[0].second);
    int m = std::lcm(a.n_, b.n_);
    int sa = m / a.n_, sb = m / b.n_;
    std::vector<Rational> c(m);
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_)
        c[(static_cast<std::int64_t>(ka) * sa + static_cast<std::int64_t>(kb) * sb) % m] += va * vb;
    return from_dense(m, std::move(c));
  }
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  Cyclotomic scaled(Rational r) const {
    r.canonicalize();
    if (r == 0) return Cyclotomic();
    Cyclotomic out = *this;
    for (auto& t : out.terms_) t.second *= r;
    return out;
  }

  Cyclotomic galois(std::int64_t k) const {
    if (std::gcd(mod_floor(k, n_), static_cast<std::int64_t>(n_)) != 1)
      fail(ErrorKind::domain, "Galois exponent not coprime to conductor");
    if (n_ == 1) return *this;
    std::vector<Rational> c(n_);
    std::int64_t kk = mod_floor(k, n_);
    for (const auto& [e, v] : terms_) c[(e * kk) % n_] += v;
    return from_dense(n_, std::move(c));
  }
  Cyclotomic conj() const { return galois(-1); }

  // Inverse via the product of the other Galois conjugates.
  Cyclotomic inverse() const {
    if (is_zero()) fail(ErrorKind::division, "inverse of zero");
    if (n_ == 1) return Cyclotomic(1 / rational());
    Cyclotomic prod(1);
    for (int k = 2; k < n_; ++k)
      if (std::gcd(k, n_) == 1) prod *= galois(k);
    Rational norm = (*this * prod).rational();
    return prod.scaled(1 / norm);
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

 private:
  int n_ = 1;
  std::vector<Term> terms_;
};

namespace detail {

struct PrimePart {
  int p;
  int q;
  int unit;  // (n/q)^-1 mod q
};

inline std::vector<PrimePart> prime_parts(int n) {
  std::vector<PrimePart> out;
  for (auto [p, e] : factorize(n)) {
    int q = 1;
    for (int i = 0; i < e; ++i) q *= static_cast<int>(p);
    out.push_back({static_cast<int>(p), q, q == 1 ? 0 : static_cast<int>(inverse_mod((n / q) % q, q))});
  }
  return out;
}

// Rewrites c (indexed by exponents mod n) in the Zumbroich basis of n.
inline void to_basis(int n, std::vector<Rational>& c) {
  for (const auto& pp : prime_parts(n)) {
    const int step = n / pp.p;
    const int top = pp.q / pp.p;
    for (int k = 0; k < n; ++k) {
      if (c[k] == 0) continue;
      int digit = static_cast<int>((static_cast<std::int64_t>(k) * pp.unit) % pp.q) / top;
      bool bad = pp.p == 2 ? digit != 0 : digit == 0;
      if (!bad) continue;
      Rational v = c[k];
      c[k] = 0;
      for (int a = 1; a < pp.p; ++a) c[(k + static_cast<std::int64_t>(a) * step) % n] -= v;
    }
  }
}

// One conductor-lowering step, assuming c is in basis form; returns false when none applies.
inline bool lower_conductor(int& n, std::vector<Rational>& c) {
  for (const auto& pp : prime_parts(n)) {
    const int p = pp.p;
    const int m = n / p;
    if (pp.q != p || p == 2) {
      bool ok = true;
      for (int k = 0; k < n && ok; ++k)
        if (c[k] != 0 && k % p != 0) ok = false;
      if (!ok) continue;
      std::vector<Rational> d(m);
      for (int k = 0; k < n; k += p) d[k / p] = c[k];
      n = m;
      c = std::move(d);
      return true;
    }
    // p exactly divides n, p odd: coefficients must agree within each fibre.
    bool ok = true;
    std::vector<Rational> d(m);
    for (int k0 = 0; k0 < n && ok; k0 += p) {
      const Rational& v = c[(k0 + m) % n];
      for (int a = 1; a < p; ++a)
        if (c[(k0 + static_cast<std::int64_t>(a) * m) % n] != v) {
          ok = false;
          break;
        }
      d[k0 / p] = -v;
    }
    if (!ok) continue;
    n = m;
    c = std::move(d);
    return true;
  }
  return false;
}

}  // namespace detail

inline Cyclotomic Cyclotomic::from_dense(int n, std::vector<Rational> c) {
  for (auto& x : c) x.canonicalize();
  detail::to_basis(n, c);
  while (n > 1 && detail::lower_conductor(n, c)) {
  }
  Cyclotomic out;
  out.n_ = n;
  for (int k = 0; k < n; ++k)
    if (c[k] != 0) out.terms_.emplace_back(k, c[k]);
  return out;
}

inline std::string Cyclotomic::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational a = abs(v);
    bool neg = v < 0;
    if (neg)
      s += "-";
    else if (!first)
      s += "+";
    first = false;
    if (k == 0) {
      s += to_string(a);
      continue;
    }
    if (a != 1) s += to_string(a) + "*";
    s += "E(" + std::to_string(n_) + ")";
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

inline Cyclotomic E(int n) { return Cyclotomic::root_of_unity(n, 1); }

inline Cyclotomic galois_conjugate(const Cyclotomic& x, std::int64_t k) { return x.galois(k); }

inline Cyclotomic pow(const Cyclotomic& x, std::int64_t e) {
  if (e < 0) return pow(x.inverse(), -e);
  Cyclotomic r(1), b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

namespace detail {

inline int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = static_cast<std::int64_t>(powmod_u64(static_cast<std::uint64_t>(mod_floor(a, p)), (p - 1) / 2, p));
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

// Positive square root of an odd prime as a cyclotomic.
inline Cyclotomic sqrt_odd_prime(int p) {
  std::vector<Rational> c(p);
  for (int k = 1; k < p; ++k) c[k] = legendre(k, p);
  Cyclotomic gauss = Cyclotomic::from_dense(p, std::move(c));
  if (p % 4 == 1) return gauss;
  return -(E(4) * gauss);
}

}  // namespace detail

// Square root with positive real part, or positive imaginary part when purely imaginary.
inline Cyclotomic sqrt_int(std::int64_t d) {
  if (d == 0) fail(ErrorKind::domain, "sqrt_int(0)");
  Cyclotomic r(1);
  if (d < 0) {
    r = E(4);
    d = -d;
  }
  std::int64_t outside = 1;
  for (auto [p, e] : factorize(d)) {
    for (int i = 0; i < e / 2; ++i) outside *= p;
    if (e % 2 == 0) continue;
    r *= p == 2 ? E(8) - pow(E(8), 3) : detail::sqrt_odd_prime(static_cast<int>(p));
  }
  return r.scaled(Rational(static_cast<long>(outside)));
}

// Least nonnegative solution of x = residues[i] mod moduli[i].
inline BigInt crt(const std::vector<BigInt>& moduli, const std::vector<BigInt>& residues) {
  if (moduli.size() != residues.size()) fail(ErrorKind::shape, "crt: length mismatch");
  BigInt x = 0, m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const BigInt& mi = moduli[i];
    if (mi <= 0) fail(ErrorKind::domain, "crt: moduli must be positive");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
    if (g != 1) fail(ErrorKind::domain, "crt: moduli not coprime");
    BigInt r = residues[i] % mi;
    if (r < 0) r += mi;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), BigInt(m % mi).get_mpz_t(), mi.get_mpz_t());
    BigInt t = ((r - x) % mi + mi) % mi * inv % mi;
    x += m * t;
    m *= mi;
  }
  return x;
}

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Cyclotomic sum() {
    Cyclotomic acc;
    skip();
    if (pos_ >= s_.size()) error("empty expression");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      Cyclotomic t = term();
      acc += sign < 0 ? -t : t;
      skip();
    }
    return acc;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::parse, "cyclotomic '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
    skip();
  }
  BigInt integer(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == digits) error("expected integer");
    std::string t = s_.substr(start, pos_ - start);
    if (t[0] == '+') t.erase(0, 1);
    return BigInt(t);
  }
  Cyclotomic root() {
    expect('E');
    expect('(');
    BigInt n = integer(false);
    expect(')');
    BigInt k = 1;
    if (peek() == '^') {
      ++pos_;
      k = integer(true);
    }
    if (n <= 0 || !n.fits_sint_p()) error("bad conductor");
    return Cyclotomic::root_of_unity(static_cast<int>(n.get_si()), k.get_si());
  }
  Cyclotomic term() {
    skip();
    if (peek() == 'E') return root();
    BigInt num = integer(false), den = 1;
    skip();
    if (peek() == '/') {
      ++pos_;
      den = integer(false);
      if (den == 0) error("zero denominator");
    }
    Rational c = make_rational(num, den);
    skip();
    if (peek() == '*') {
      ++pos_;
      return root().scaled(c);
    }
    return Cyclotomic(c);
  }
};

}  // namespace detail

// Parses sums of c, c*E(n), c*E(n)^k, E(n), E(n)^k with rational c.
inline Cyclotomic parse(const std::string& s) { return detail::Parser(s).sum(); }

}  // namespace chartab::cyclo
