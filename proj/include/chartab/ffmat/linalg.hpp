#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/ffmat/matrix.hpp"

namespace chartab::ffmat {

struct Echelon {
  FFMatrix basis;  // reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;
};

namespace detail {

// In-place elimination on a generic matrix; returns pivot columns.
inline std::vector<std::size_t> eliminate(FFMatrix& m, bool full, std::size_t col_limit) {
  if (m.packed()) return gf2::eliminate(m.words().data(), m.stride(), m.rows(), col_limit, full);
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t col = 0; col < col_limit && row < r; ++col) {
    std::size_t piv = row;
    while (piv < r && m.get(piv, col) == 0) ++piv;
    if (piv == r) continue;
    if (piv != row)
      for (std::size_t j = 0; j < c; ++j) {
        Elt t = m.get(piv, j);
        m.set(piv, j, m.get(row, j));
        m.set(row, j, t);
      }
    Elt inv = f.inv(m.get(row, col));
    if (inv != 1)
      for (std::size_t j = col; j < c; ++j) m.set(row, j, f.mul(inv, m.get(row, j)));
    for (std::size_t i = full ? 0 : row + 1; i < r; ++i) {
      if (i == row) continue;
      Elt x = m.get(i, col);
      if (!x) continue;
      Elt nx = f.neg(x);
      for (std::size_t j = col; j < c; ++j)
        if (Elt y = m.get(row, j)) m.set(i, j, f.add(m.get(i, j), f.mul(nx, y)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline FFMatrix hconcat(const FFMatrix& a, const FFMatrix& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::shape, "hconcat row mismatch");
  FFMatrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.get(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.get(i, j));
  }
  return m;
}

}  // namespace detail

inline Echelon rref(const FFMatrix& m) {
  FFMatrix w = m;
  auto piv = detail::eliminate(w, true, w.cols());
  return {w.block(0, 0, piv.size(), w.cols()), piv};
}

inline std::size_t rank(const FFMatrix& m) {
  FFMatrix w = m;
  return detail::eliminate(w, false, w.cols()).size();
}

inline Echelon echelonize(const Field& f, const std::vector<FFVector>& vs, std::size_t length) {
  for (const auto& v : vs)
    if (v.size() != length) fail(ErrorKind::shape, "vector length mismatch");
  return rref(FFMatrix::from_rows(f, vs, length));
}

// Basis of {v : v * m = 0} in reduced row echelon form.
inline std::vector<FFVector> left_nullspace(const FFMatrix& m) {
  const Field& f = m.field();
  Echelon e = rref(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<FFVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FFVector v(f, n);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (Elt x = e.basis.get(i, free)) v[e.pivots[i]] = f.neg(x);
    out.push_back(std::move(v));
  }
  if (out.empty()) return out;
  return rref(FFMatrix::from_rows(f, out, n)).basis.row_list();
}

inline FFMatrix inverse(const FFMatrix& m) {
  if (!m.square()) fail(ErrorKind::shape, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FFMatrix aug = detail::hconcat(m, FFMatrix::identity(m.field(), n));
  auto piv = detail::eliminate(aug, true, n);
  if (piv.size() != n) fail(ErrorKind::singular, "matrix is singular");
  return aug.block(0, n, n, n);
}

inline FFMatrix power(const FFMatrix& m, std::int64_t e) {
  if (!m.square()) fail(ErrorKind::shape, "power of a non-square matrix");
  FFMatrix base = e < 0 ? inverse(m) : m;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  FFMatrix r = FFMatrix::identity(m.field(), m.rows());
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

inline Elt trace(const FFMatrix& m) {
  if (!m.square()) fail(ErrorKind::shape, "trace of a non-square matrix");
  Elt t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t = m.field().add(t, m.get(i, i));
  return t;
}

inline std::int64_t trace_lift(const FFMatrix& m) {
  if (!m.field().is_prime()) fail(ErrorKind::field, "trace_lift needs a prime field");
  return static_cast<std::int64_t>(trace(m));
}

struct SumIntersection {
  std::vector<FFVector> sum;
  std::vector<FFVector> intersection;
};

// Zassenhaus: echelonize [[u, u], [w, 0]].
inline SumIntersection sum_intersection(const Field& f, const std::vector<FFVector>& u, const std::vector<FFVector>& w,
                                        std::size_t length) {
  for (const auto& v : u)
    if (v.size() != length) fail(ErrorKind::shape, "vector length mismatch");
  for (const auto& v : w)
    if (v.size() != length) fail(ErrorKind::shape, "vector length mismatch");
  FFMatrix z(f, u.size() + w.size(), 2 * length);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < length; ++j) {
      z.set(i, j, u[i][j]);
      z.set(i, length + j, u[i][j]);
    }
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < length; ++j) z.set(u.size() + i, j, w[i][j]);
  Echelon e = rref(z);
  SumIntersection out;
  std::vector<FFVector> inter;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    FFVector row = e.basis.row(i);
    if (e.pivots[i] < length) {
      FFVector s(f, length);
      for (std::size_t j = 0; j < length; ++j) s[j] = row[j];
      out.sum.push_back(std::move(s));
    } else {
      FFVector t(f, length);
      for (std::size_t j = 0; j < length; ++j) t[j] = row[length + j];
      inter.push_back(std::move(t));
    }
  }
  if (!inter.empty()) out.intersection = echelonize(f, inter, length).basis.row_list();
  return out;
}

inline SumIntersection sum_intersection(const std::vector<FFVector>& u, const std::vector<FFVector>& w) {
  if (u.empty() && w.empty()) return {};
  const FFVector& any = u.empty() ? w.front() : u.front();
  return sum_intersection(any.field(), u, w, any.size());
}

// Incrementally grown subspace kept in semi-echelon form (each stored vector
// is normed with a distinct leading column).
class EchelonSpace {
 public:
  EchelonSpace(const Field& f, std::size_t length) : f_(&f), n_(length) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return n_; }

  FFVector reduce(FFVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Elt x = v[lead_[i]];
      if (x) v.add_scaled(rows_[i], f_->neg(x));
    }
    return v;
  }
  bool contains(const FFVector& v) const { return reduce(v).is_zero(); }
  // Adds v if it enlarges the span; returns whether it did.
  bool add(const FFVector& v) {
    FFVector r = reduce(v);
    if (r.is_zero()) return false;
    std::size_t l = r.leading();
    rows_.push_back(r.normed());
    lead_.push_back(l);
    return true;
  }
  const std::vector<FFVector>& vectors() const { return rows_; }

 private:
  const Field* f_;
  std::size_t n_;
  std::vector<FFVector> rows_;
  std::vector<std::size_t> lead_;
};

}  // namespace chartab::ffmat
