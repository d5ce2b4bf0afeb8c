#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/ffmat/field.hpp"
#include "chartab/ffmat/gf2.hpp"

namespace chartab::ffmat {

class FFVector {
 public:
  FFVector() = default;
  FFVector(const Field& f, std::size_t n) : f_(&f), v_(n, 0) {}
  FFVector(const Field& f, std::vector<Elt> v) : f_(&f), v_(std::move(v)) {}

  static FFVector from_ints(const Field& f, const std::vector<std::int64_t>& xs) {
    FFVector v(f, xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v.v_[i] = f.from_int(xs[i]);
    return v;
  }
  static FFVector unit(const Field& f, std::size_t n, std::size_t i) {
    FFVector v(f, n);
    v.v_[i] = 1;
    return v;
  }

  const Field& field() const { return *f_; }
  std::size_t size() const { return v_.size(); }
  Elt operator[](std::size_t i) const { return v_[i]; }
  Elt& operator[](std::size_t i) { return v_[i]; }
  const std::vector<Elt>& data() const { return v_; }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](Elt x) { return x == 0; });
  }
  // Index of the first nonzero entry, or size() for the zero vector.
  std::size_t leading() const {
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i]) return i;
    return v_.size();
  }

  FFVector& add_scaled(const FFVector& o, Elt c) {
    if (c == 0) return *this;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (o.v_[i]) v_[i] = f_->add(v_[i], f_->mul(c, o.v_[i]));
    return *this;
  }
  FFVector scaled(Elt c) const {
    FFVector r(*f_, v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = f_->mul(c, v_[i]);
    return r;
  }
  // Scales so that the leading entry is 1.
  FFVector normed() const {
    std::size_t l = leading();
    if (l == v_.size() || v_[l] == 1) return *this;
    return scaled(f_->inv(v_[l]));
  }

  friend FFVector operator+(FFVector a, const FFVector& b) { return a.add_scaled(b, 1); }
  friend FFVector operator-(FFVector a, const FFVector& b) { return a.add_scaled(b, a.f_->neg(1)); }
  friend bool operator==(const FFVector& a, const FFVector& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator!=(const FFVector& a, const FFVector& b) { return !(a == b); }
  friend bool operator<(const FFVector& a, const FFVector& b) { return a.v_ < b.v_; }

 private:
  const Field* f_ = nullptr;
  std::vector<Elt> v_;
};

class FFMatrix {
 public:
  FFMatrix() = default;
  FFMatrix(const Field& f, std::size_t r, std::size_t c) : f_(&f), r_(r), c_(c) {
    if (packed()) {
      stride_ = gf2::words_for(c);
      bits_.assign(r * stride_, 0);
    } else {
      data_.assign(r * c, 0);
    }
  }

  static FFMatrix identity(const Field& f, std::size_t n) {
    FFMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }
  static FFMatrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    FFMatrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) fail(ErrorKind::shape, "ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.from_int(rows[i][j]));
    }
    return m;
  }
  static FFMatrix from_rows(const Field& f, const std::vector<FFVector>& rows, std::size_t cols) {
    FFMatrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
  }
  template <class Rng>
  static FFMatrix random(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
    FFMatrix m(f, r, c);
    if (m.packed()) {
      for (auto& w : m.bits_) w = rng();
      m.clear_padding();
    } else {
      std::uniform_int_distribution<Elt> d(0, f.q() - 1);
      for (auto& x : m.data_) x = d(rng);
    }
    return m;
  }
  static FFMatrix permutation(const Field& f, const std::vector<std::size_t>& images) {
    // Row i carries a 1 in column images[i] (0-based), so e_i * M = e_{images[i]}.
    FFMatrix m(f, images.size(), images.size());
    for (std::size_t i = 0; i < images.size(); ++i) m.set(i, images[i], 1);
    return m;
  }

  const Field& field() const { return *f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  bool packed() const { return f_->p() == 2 && f_->k() == 1; }
  std::size_t stride() const { return stride_; }

  Elt get(std::size_t i, std::size_t j) const {
    if (packed()) return gf2::get_bit(&bits_[i * stride_], j);
    return data_[i * c_ + j];
  }
  void set(std::size_t i, std::size_t j, Elt v) {
    if (packed()) {
      if (gf2::get_bit(&bits_[i * stride_], j) != static_cast<bool>(v & 1)) gf2::flip_bit(&bits_[i * stride_], j);
    } else {
      data_[i * c_ + j] = v;
    }
  }

  gf2::Word* row_words(std::size_t i) { return bits_.data() + i * stride_; }
  const gf2::Word* row_words(std::size_t i) const { return bits_.data() + i * stride_; }
  std::vector<gf2::Word>& words() { return bits_; }
  const std::vector<gf2::Word>& words() const { return bits_; }
  const std::vector<Elt>& entries() const { return data_; }

  FFVector row(std::size_t i) const {
    FFVector v(*f_, c_);
    for (std::size_t j = 0; j < c_; ++j) v[j] = get(i, j);
    return v;
  }
  std::vector<FFVector> row_list() const {
    std::vector<FFVector> out;
    for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
    return out;
  }
  void set_row(std::size_t i, const FFVector& v) {
    if (v.size() != c_) fail(ErrorKind::shape, "row length mismatch");
    for (std::size_t j = 0; j < c_; ++j) set(i, j, v[j]);
  }

  FFMatrix transpose() const {
    FFMatrix t(*f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (Elt x = get(i, j)) t.set(j, i, x);
    return t;
  }

  // Same entries viewed in the extension field GF(p^k) containing this field.
  FFMatrix embed(const Field& ext) const {
    if (ext.p() != f_->p() || !f_->is_prime()) fail(ErrorKind::field, "embedding needs a prime base field");
    FFMatrix m(ext, r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m.set(i, j, get(i, j));
    return m;
  }

  FFMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    FFMatrix m(*f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m.set(i, j, get(r0 + i, c0 + j));
    return m;
  }

  friend bool operator==(const FFMatrix& a, const FFMatrix& b) {
    return a.f_ == b.f_ && a.r_ == b.r_ && a.c_ == b.c_ && a.bits_ == b.bits_ && a.data_ == b.data_;
  }
  friend bool operator!=(const FFMatrix& a, const FFMatrix& b) { return !(a == b); }

  friend FFMatrix operator+(const FFMatrix& a, const FFMatrix& b) {
    check_same_shape(a, b);
    FFMatrix r = a;
    if (a.packed()) {
      for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] ^= b.bits_[i];
    } else {
      for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.f_->add(a.data_[i], b.data_[i]);
    }
    return r;
  }
  friend FFMatrix operator-(const FFMatrix& a, const FFMatrix& b) { return a + b.scaled(a.f_->neg(1)); }

  FFMatrix scaled(Elt c) const {
    FFMatrix r = *this;
    if (packed()) {
      if ((c & 1) == 0) std::fill(r.bits_.begin(), r.bits_.end(), 0);
    } else {
      for (auto& x : r.data_) x = f_->mul(c, x);
    }
    return r;
  }

  friend FFMatrix operator*(const FFMatrix& a, const FFMatrix& b) {
    if (a.f_ != b.f_) fail(ErrorKind::shape, "field mismatch in multiply");
    if (a.c_ != b.r_) fail(ErrorKind::shape, "dimension mismatch in multiply");
    FFMatrix c(*a.f_, a.r_, b.c_);
    if (a.packed()) {
      gf2::multiply(a.bits_.data(), a.stride_, b.bits_.data(), b.stride_, c.bits_.data(), a.r_, a.c_, b.c_);
      return c;
    }
    const Field& f = *a.f_;
    const std::size_t n = a.c_, m = b.c_;
    if (f.is_prime()) {
      // Accumulate in 64 bits and reduce once per row chunk.
      const std::uint64_t p = static_cast<std::uint64_t>(f.p());
      parallel_chunks(a.r_, 32, [&](std::size_t r0, std::size_t r1) {
        std::vector<std::uint64_t> acc(m);
        for (std::size_t i = r0; i < r1; ++i) {
          std::fill(acc.begin(), acc.end(), 0);
          for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t x = a.data_[i * n + k];
            if (!x) continue;
            const Elt* brow = &b.data_[k * m];
            for (std::size_t j = 0; j < m; ++j) acc[j] += x * brow[j];
            if ((k & 0xffff) == 0xffff)
              for (auto& v : acc) v %= p;
          }
          for (std::size_t j = 0; j < m; ++j) c.data_[i * m + j] = acc[j] % p;
        }
      });
      return c;
    }
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        Elt x = a.data_[i * n + k];
        if (!x) continue;
        for (std::size_t j = 0; j < m; ++j)
          if (Elt y = b.data_[k * m + j]) c.data_[i * m + j] = f.add(c.data_[i * m + j], f.mul(x, y));
      }
    return c;
  }

  friend FFVector operator*(const FFVector& v, const FFMatrix& m) {
    if (v.size() != m.r_) fail(ErrorKind::shape, "vector length mismatch");
    const Field& f = *m.f_;
    FFVector out(f, m.c_);
    if (m.packed()) {
      std::vector<gf2::Word> acc(m.stride_, 0);
      for (std::size_t i = 0; i < m.r_; ++i)
        if (v[i] & 1) gf2::xor_into(acc.data(), m.row_words(i), m.stride_);
      for (std::size_t j = 0; j < m.c_; ++j) out[j] = gf2::get_bit(acc.data(), j);
      return out;
    }
    for (std::size_t i = 0; i < m.r_; ++i) {
      Elt x = v[i];
      if (!x) continue;
      for (std::size_t j = 0; j < m.c_; ++j)
        if (Elt y = m.data_[i * m.c_ + j]) out[j] = f.add(out[j], f.mul(x, y));
    }
    return out;
  }

  bool is_identity() const { return square() && *this == identity(*f_, r_); }

 private:
  const Field* f_ = nullptr;
  std::size_t r_ = 0, c_ = 0, stride_ = 0;
  std::vector<gf2::Word> bits_;
  std::vector<Elt> data_;

  static void check_same_shape(const FFMatrix& a, const FFMatrix& b) {
    if (a.f_ != b.f_ || a.r_ != b.r_ || a.c_ != b.c_) fail(ErrorKind::shape, "shape or field mismatch");
  }
  void clear_padding() {
    if (c_ % 64 == 0) return;
    gf2::Word mask = (gf2::Word{1} << (c_ % 64)) - 1;
    for (std::size_t i = 0; i < r_; ++i) bits_[i * stride_ + stride_ - 1] &= mask;
  }
};

}  // namespace chartab::ffmat
