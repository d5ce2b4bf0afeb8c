#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/ffmat/conway.hpp"
#include "chartab/numbers.hpp"

namespace chartab::ffmat {

// Field elements are codes sum d_i p^i, d_i the coefficient of x^i modulo the
// Conway polynomial. For k = 1 the code is the residue itself.
using Elt = std::uint64_t;

class Field {
 public:
  Field(int p, int k) : p_(p), k_(k) {
    if (p != 2 && p != 3 && p != 5 && p != 7) fail(ErrorKind::field, "characteristic must be 2, 3, 5 or 7");
    if (k < 1 || k > 12) fail(ErrorKind::field, "extension degree must be in 1..12");
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= static_cast<Elt>(p);
    poly_ = conway_polynomial(p, k);
    if (k > 1 && q_ <= (Elt{1} << 20)) build_tables();
  }

  int p() const { return p_; }
  int k() const { return k_; }
  Elt q() const { return q_; }
  bool is_prime() const { return k_ == 1; }
  const std::vector<int>& polynomial() const { return poly_; }

  Elt from_int(std::int64_t v) const { return static_cast<Elt>(mod_floor(v, p_)); }

  Elt add(Elt a, Elt b) const {
    if (k_ == 1) {
      Elt s = a + b;
      return s >= static_cast<Elt>(p_) ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    Elt r = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
      Elt d = (a % p_ + b % p_) % p_;
      r += d * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }

  Elt neg(Elt a) const {
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    Elt r = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
      Elt d = a % p_;
      r += ((p_ - d) % p_) * place;
      a /= p_;
      place *= p_;
    }
    return r;
  }

  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return a * b % p_;
    if (!exp_.empty()) {
      Elt e = log_[a] + log_[b];
      if (e >= q_ - 1) e -= q_ - 1;
      return exp_[e];
    }
    return poly_mul(a, b);
  }

  Elt pow(Elt a, std::uint64_t e) const {
    Elt r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Elt inv(Elt a) const {
    if (a == 0) fail(ErrorKind::division, "inverse of zero in GF(" + std::to_string(q_) + ")");
    if (k_ > 1 && !exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
  }

  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  // Root of the Conway polynomial; a primitive element.
  Elt generator() const { return k_ == 1 ? static_cast<Elt>((p_ - poly_[0]) % p_) : static_cast<Elt>(p_); }

  std::vector<int> digits(Elt a) const {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = static_cast<int>(a % p_);
      a /= p_;
    }
    return d;
  }

  std::string name() const { return "GF(" + std::to_string(p_) + (k_ > 1 ? "^" + std::to_string(k_) : "") + ")"; }

 private:
  int p_, k_;
  Elt q_;
  std::vector<int> poly_;
  std::vector<std::uint32_t> exp_, log_;

  Elt poly_mul(Elt a, Elt b) const {
    auto da = digits(a), db = digits(b);
    std::vector<int> r(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
      if (da[i])
        for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + da[i] * db[j]) % p_;
    for (int d = 2 * k_ - 2; d >= k_; --d) {
      int c = r[d];
      if (!c) continue;
      r[d] = 0;
      for (int i = 0; i < k_; ++i) r[d - k_ + i] = ((r[d - k_ + i] - c * poly_[i]) % p_ + p_) % p_;
    }
    Elt out = 0;
    for (int i = k_ - 1; i >= 0; --i) out = out * p_ + r[i];
    return out;
  }

  void build_tables() {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::vector<int> cur(k_, 0);
    cur[0] = 1;
    for (Elt e = 0; e < q_ - 1; ++e) {
      Elt code = 0;
      for (int i = k_ - 1; i >= 0; --i) code = code * p_ + cur[i];
      exp_[e] = static_cast<std::uint32_t>(code);
      log_[code] = static_cast<std::uint32_t>(e);
      int top = cur[k_ - 1];
      for (int i = k_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top)
        for (int i = 0; i < k_; ++i) cur[i] = ((cur[i] - top * poly_[i]) % p_ + p_) % p_;
    }
  }
};

// Shared, immutable field instances.
inline const Field& field(int p, int k = 1) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_unique<Field>(p, k);
  return *slot;
}

}  // namespace chartab::ffmat
