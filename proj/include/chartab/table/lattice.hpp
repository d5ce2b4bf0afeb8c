#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/numbers.hpp"
#include "chartab/table/head.hpp"

namespace chartab::table {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt round_rational(const Rational& x) {
  // Nearest integer, ties rounded down.
  Rational shifted = x + Rational(1, 2);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  if (Rational(q) - x == Rational(1, 2)) q -= 1;
  return q;
}

struct Hnf {
  IntMatrix h;     // U * A in row echelon form with positive pivots, entries above pivots reduced
  IntMatrix u;     // unimodular transform
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {
inline void row_sub(IntVector& a, const IntVector& b, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= q * b[j];
}
inline void row_neg(IntVector& a) {
  for (auto& x : a) x = -x;
}
}  // namespace detail

inline Hnf hermite_normal_form(const IntMatrix& a) {
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != m) fail(ErrorKind::shape, "ragged integer matrix");
  Hnf r{a, IntMatrix(n, IntVector(n, 0)), {}};
  for (std::size_t i = 0; i < n; ++i) r.u[i][i] = 1;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m && row < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = row; i < n; ++i)
        if (r.h[i][c] != 0 && (best == n || abs(r.h[i][c]) < abs(r.h[best][c]))) best = i;
      if (best == n) break;
      std::swap(r.h[row], r.h[best]);
      std::swap(r.u[row], r.u[best]);
      bool clean = true;
      for (std::size_t i = row + 1; i < n; ++i) {
        if (r.h[i][c] == 0) continue;
        BigInt q = floor_div(r.h[i][c], r.h[row][c]);
        detail::row_sub(r.h[i], r.h[row], q);
        detail::row_sub(r.u[i], r.u[row], q);
        if (r.h[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r.h[row][c] == 0) continue;
    if (r.h[row][c] < 0) {
      detail::row_neg(r.h[row]);
      detail::row_neg(r.u[row]);
    }
    for (std::size_t i = 0; i < row; ++i) {
      BigInt q = floor_div(r.h[i][c], r.h[row][c]);
      detail::row_sub(r.h[i], r.h[row], q);
      detail::row_sub(r.u[i], r.u[row], q);
    }
    r.pivots.push_back(c);
    ++row;
  }
  return r;
}

// Integer x with x * m = v, if one exists.
inline std::optional<IntVector> solution_int_mat(const IntMatrix& m, const IntVector& v) {
  const std::size_t cols = m.empty() ? v.size() : m[0].size();
  if (v.size() != cols) fail(ErrorKind::shape, "right-hand side length differs from the column count");
  if (m.empty()) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return IntVector{};
  }
  Hnf hnf = hermite_normal_form(m);
  IntVector rest = v, y(hnf.rank());
  for (std::size_t j = 0; j < hnf.rank(); ++j) {
    const BigInt& piv = hnf.h[j][hnf.pivots[j]];
    const BigInt& val = rest[hnf.pivots[j]];
    if (val % piv != 0) return std::nullopt;
    y[j] = val / piv;
    detail::row_sub(rest, hnf.h[j], y[j]);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  IntVector x(m.size(), 0);
  for (std::size_t j = 0; j < hnf.rank(); ++j)
    for (std::size_t i = 0; i < m.size(); ++i) x[i] += y[j] * hnf.u[j][i];
  return x;
}

struct LllReduction {
  IntMatrix transform;  // rows: coefficients of the reduced vectors over the input basis
  IntMatrix gram;       // Gram matrix of the reduced vectors
};

// LLL on a positive definite integral Gram matrix with exact rational Gram-Schmidt data.
inline LllReduction lll_gram(const IntMatrix& gram, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta > 1) fail(ErrorKind::domain, "LLL delta must lie in (1/4, 1]");
  const std::size_t n = gram.size();
  IntMatrix g = gram, h(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) h[i][i] = 1;
  if (n == 0) return {h, g};
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  b[0] = Rational(g[0][0]);
  std::size_t kmax = 0;

  auto sub_row = [&](std::size_t k, std::size_t l, const BigInt& q) {
    detail::row_sub(h[k], h[l], q);
    for (std::size_t j = 0; j < n; ++j) g[k][j] -= q * g[l][j];
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) g[j][k] = g[k][j];
    g[k][k] -= q * g[k][l];
  };
  auto red = [&](std::size_t k, std::size_t l) {
    if (abs(mu[k][l]) * 2 <= 1) return;
    BigInt q = round_rational(mu[k][l]);
    sub_row(k, l, q);
    mu[k][l] -= q;
    for (std::size_t i = 0; i < l; ++i) mu[k][i] -= Rational(q) * mu[l][i];
  };
  auto swap = [&](std::size_t k) {
    std::swap(h[k], h[k - 1]);
    std::swap(g[k], g[k - 1]);
    for (auto& row : g) std::swap(row[k], row[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
    Rational m = mu[k][k - 1];
    Rational bb = b[k] + m * m * b[k - 1];
    mu[k][k - 1] = m * b[k - 1] / bb;
    b[k] = b[k - 1] * b[k] / bb;
    b[k - 1] = bb;
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Rational t = mu[i][k];
      mu[i][k] = mu[i][k - 1] - m * t;
      mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
    }
  };

  std::size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j < k; ++j) {
        Rational s(g[k][j]);
        for (std::size_t i = 0; i < j; ++i) s -= mu[j][i] * mu[k][i] * b[i];
        mu[k][j] = s / b[j];
      }
      Rational s(g[k][k]);
      for (std::size_t j = 0; j < k; ++j) s -= mu[k][j] * mu[k][j] * b[j];
      b[k] = s;
      if (b[k] <= 0) fail(ErrorKind::precondition, "Gram matrix is not positive definite");
    }
    red(k, k - 1);
    if (b[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * b[k - 1]) {
      swap(k);
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
  return {h, g};
}

inline constexpr std::pair<long, long> default_lll_delta{3, 4};

struct LllCharacters {
  std::vector<ClassFunction> irreducibles;
  std::vector<ClassFunction> remainders;
  IntMatrix basis_coefficients;  // reduced basis over the inputs, irreducibles first
  IntMatrix reduction;           // unimodular change of basis applied by LLL
};

namespace detail {

inline std::vector<BigInt> cyclotomic_polynomial(int n) {
  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors; coefficients low to high.
  std::vector<BigInt> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    std::vector<BigInt> den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      BigInt c = num[i];
      q[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

// Linear coordinates of class functions: per class, the power-basis polynomial of the value reduced
// modulo the cyclotomic polynomial of a common conductor, scaled to integers.
inline IntMatrix coordinates(const std::vector<ClassFunction>& vs, std::size_t ncls) {
  std::vector<int> cond(ncls, 1);
  for (const auto& v : vs)
    for (std::size_t c = 0; c < ncls; ++c) cond[c] = std::lcm(cond[c], v[c].conductor());
  std::vector<std::vector<BigInt>> phi(ncls);
  for (std::size_t c = 0; c < ncls; ++c) phi[c] = cyclotomic_polynomial(cond[c]);
  std::vector<std::vector<Rational>> rows(vs.size());
  BigInt den = 1;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t c = 0; c < ncls; ++c) {
      std::vector<Rational> d = vs[i][c].dense(cond[c]);
      const std::size_t deg = phi[c].size() - 1;
      for (std::size_t k = d.size(); k-- > deg;) {
        Rational t = d[k];
        if (t == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) d[k - deg + j] -= t * phi[c][j];
      }
      for (std::size_t k = 0; k < deg; ++k) {
        den = lcm(den, BigInt(d[k].get_den()));
        rows[i].push_back(d[k]);
      }
    }
  IntMatrix out;
  for (const auto& r : rows) {
    IntVector iv;
    for (const auto& x : r) iv.push_back(BigInt(x * Rational(den)));
    out.push_back(std::move(iv));
  }
  return out;
}

}  // namespace detail

inline ClassFunction combination(const std::vector<ClassFunction>& vs, const IntVector& coeff, std::size_t ncls) {
  ClassFunction r(ncls);
  for (std::size_t j = 0; j < vs.size(); ++j)
    if (coeff[j] != 0) r = r + Cyclotomic(coeff[j]) * vs[j];
  return r;
}

inline LllCharacters lll_characters(const TableHead& h, const std::vector<ClassFunction>& virtuals,
                                    const Rational& delta = Rational(default_lll_delta.first, default_lll_delta.second)) {
  const std::size_t n = virtuals.size();
  for (const auto& v : virtuals) check_length(h, v);
  IntMatrix gram(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Cyclotomic s = scalar_product(h, virtuals[i], virtuals[j]);
      if (!s.is_integer()) fail(ErrorKind::precondition, "scalar product " + s.str() + " is not a rational integer");
      gram[i][j] = gram[j][i] = s.integer();
    }
  // A lattice basis as integral combinations of the (possibly dependent) inputs.
  Hnf hnf = hermite_normal_form(detail::coordinates(virtuals, h.ncls()));
  const std::size_t r = hnf.rank();
  IntMatrix basis(hnf.u.begin(), hnf.u.begin() + static_cast<std::ptrdiff_t>(r));
  IntMatrix bg(r, IntVector(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t a = 0; a < n; ++a) {
        if (basis[i][a] == 0) continue;
        for (std::size_t b = 0; b < n; ++b) bg[i][j] += basis[i][a] * gram[a][b] * basis[j][b];
      }
  LllReduction red = lll_gram(bg, delta);
  LllCharacters out;
  out.reduction = red.transform;
  IntMatrix irr_coeff, rem_coeff;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector coeff(n, 0);
    for (std::size_t j = 0; j < r; ++j)
      if (red.transform[i][j] != 0)
        for (std::size_t a = 0; a < n; ++a) coeff[a] += red.transform[i][j] * basis[j][a];
    ClassFunction v = combination(virtuals, coeff, h.ncls());
    if (red.gram[i][i] == 1 && v[0].is_rational() && !v[0].is_zero()) {
      if (v[0].rational() < 0) {
        v = Cyclotomic(-1) * v;
        for (auto& x : coeff) x = -x;
      }
      out.irreducibles.push_back(std::move(v));
      irr_coeff.push_back(std::move(coeff));
    } else {
      out.remainders.push_back(std::move(v));
      rem_coeff.push_back(std::move(coeff));
    }
  }
  out.basis_coefficients = irr_coeff;
  out.basis_coefficients.insert(out.basis_coefficients.end(), rem_coeff.begin(), rem_coeff.end());
  return out;
}

}  // namespace chartab::table
