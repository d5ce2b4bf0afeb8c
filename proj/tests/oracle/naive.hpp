#pragma once

// Reference implementations used only as test oracles. They work on plain
// integer matrices modulo a prime and on floating-point complex numbers, and
// share no code with the library kernels.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include "chartab/cyclo/cyclotomic.hpp"
#include "chartab/ffmat/matrix.hpp"

namespace oracle {

using IntMat = std::vector<std::vector<int>>;

inline IntMat to_ints(const chartab::ffmat::FFMatrix& m) {
  IntMat out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<int>(m.get(i, j));
  return out;
}

inline IntMat multiply(const IntMat& a, const IntMat& b, int p) {
  std::size_t r = a.size(), n = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMat out(r, std::vector<int>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < n; ++k) s += static_cast<long>(a[i][k]) * b[k][j];
      out[i][j] = static_cast<int>(s % p);
    }
  return out;
}

inline int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

inline std::size_t rank(IntMat a, int p) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    int inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      int f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

inline std::complex<double> evaluate(const chartab::cyclo::Cyclotomic& x) {
  std::complex<double> s = 0;
  const double n = x.conductor();
  for (const auto& [k, c] : x.terms())
    s += c.get_d() * std::polar(1.0, 2 * std::numbers::pi * k / n);
  return s;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

using IntVec = std::vector<int>;

inline IntVec vec_times(const IntVec& v, const IntMat& m, int p) {
  IntVec out(m.empty() ? 0 : m[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = (out[j] + v[i] * m[i][j]) % p;
  return out;
}

// Every element of the submodule generated by v, by closure under addition and the generators.
inline std::set<IntVec> submodule_elements(const IntVec& v, const std::vector<IntMat>& gens, int p) {
  std::set<IntVec> elems{IntVec(v.size(), 0)};
  std::vector<IntVec> todo{v};
  while (!todo.empty()) {
    IntVec x = todo.back();
    todo.pop_back();
    if (elems.count(x)) continue;
    std::vector<IntVec> snapshot(elems.begin(), elems.end());
    for (const auto& e : snapshot)
      for (int c = 1; c < p; ++c) {
        IntVec y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = (e[i] + c * x[i]) % p;
        if (!elems.count(y)) todo.push_back(y);
      }
    elems.insert(x);
    for (const auto& g : gens) todo.push_back(vec_times(x, g, p));
  }
  return elems;
}

// All nonzero vectors of GF(p)^n.
inline std::vector<IntVec> all_vectors(std::size_t n, int p) {
  std::vector<IntVec> out;
  IntVec v(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && v[i] == p - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    out.push_back(v);
  }
  return out;
}

inline bool irreducible(const std::vector<IntMat>& gens, std::size_t n, int p) {
  std::size_t full = 1;
  for (std::size_t i = 0; i < n; ++i) full *= static_cast<std::size_t>(p);
  for (const auto& v : all_vectors(n, p))
    if (submodule_elements(v, gens, p).size() != full) return false;
  return true;
}

}  // namespace oracle
