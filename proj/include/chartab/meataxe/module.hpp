#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/ffmat.hpp"
#include "chartab/perm.hpp"
#include "chartab/slp/program.hpp"
#include "chartab/slp/search.hpp"

namespace chartab::meataxe {

using ffmat::Elt;
using ffmat::Field;
using ffmat::FFMatrix;
using ffmat::FFVector;

class GModule {
 public:
  GModule(const Field& f, std::size_t dim, std::vector<FFMatrix> gens) : f_(&f), dim_(dim), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (&g.field() != f_) fail(ErrorKind::shape, "module generators over different fields");
      if (g.rows() != dim_ || g.cols() != dim_) fail(ErrorKind::shape, "module generator has the wrong shape");
      if (ffmat::rank(g) != dim_) fail(ErrorKind::singular, "module generator is not invertible");
    }
  }
  explicit GModule(std::vector<FFMatrix> gens)
      : GModule(gens.empty() ? fail_empty() : gens[0].field(), gens.empty() ? 0 : gens[0].rows(), std::move(gens)) {}

  const Field& field() const { return *f_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FFMatrix>& generators() const { return gens_; }

  // Contragredient action on row vectors: g -> (g^-1)^T.
  GModule dual() const {
    std::vector<FFMatrix> d;
    for (const auto& g : gens_) d.push_back(ffmat::inverse(g).transpose());
    return GModule(*f_, dim_, std::move(d));
  }

 private:
  const Field* f_;
  std::size_t dim_;
  std::vector<FFMatrix> gens_;

  [[noreturn]] static const Field& fail_empty() { fail(ErrorKind::shape, "module needs a field; pass it explicitly"); }
};

// Spinning: BFS over the growing list, appending images that enlarge the span.
inline std::vector<FFVector> spin(const Field& f, std::size_t dim, const std::vector<FFMatrix>& gens, const FFVector& seed) {
  if (seed.size() != dim) fail(ErrorKind::shape, "seed length differs from module dimension");
  if (seed.is_zero()) fail(ErrorKind::seed, "seed vector is zero");
  ffmat::EchelonSpace span(f, dim);
  std::vector<FFVector> b{seed};
  span.add(seed);
  for (std::size_t i = 0; i < b.size() && b.size() < dim; ++i)
    for (const auto& g : gens) {
      FFVector img = b[i] * g;
      if (span.add(img)) {
        b.push_back(std::move(img));
        if (b.size() == dim) break;
      }
    }
  return b;
}

inline std::vector<FFVector> standard_basis(const GModule& m, const FFVector& seed) {
  return spin(m.field(), m.dim(), m.generators(), seed);
}

inline GModule rebase(const GModule& m, const std::vector<FFVector>& basis) {
  if (basis.size() != m.dim()) fail(ErrorKind::shape, "basis must have dim vectors");
  FFMatrix b = FFMatrix::from_rows(m.field(), basis, m.dim());
  FFMatrix inv = ffmat::inverse(b);
  std::vector<FFMatrix> gens;
  for (const auto& g : m.generators()) gens.push_back(b * g * inv);
  return GModule(m.field(), m.dim(), std::move(gens));
}

// Sum of the program's outputs, read as an element of the matrix algebra.
inline FFMatrix algebra_element(const GModule& m, const slp::Slp& word) {
  auto outs = slp::evaluate(word, m.generators());
  FFMatrix sum = outs[0];
  for (std::size_t i = 1; i < outs.size(); ++i) sum = sum + outs[i];
  return sum;
}

// Normed generator of the one-dimensional left nullspace of the word.
inline FFVector canonical_seed(const GModule& m, const slp::Slp& word) {
  auto nsp = ffmat::left_nullspace(algebra_element(m, word));
  if (nsp.size() != 1)
    fail(ErrorKind::non_canonical_seed, "nullspace of the word has dimension " + std::to_string(nsp.size()));
  return nsp[0].normed();
}

// First sum u + v of distinct positive words (length-lexicographic pairs) whose nullspace is one-dimensional.
inline slp::Slp find_seed_word(const GModule& m, std::size_t max_length) {
  std::vector<std::pair<std::vector<int>, FFMatrix>> words;
  slp::enumerate_words<FFMatrix>(m.generators(), max_length, [&](const std::vector<int>& l, const FFMatrix& g) {
    words.emplace_back(l, g);
    return false;
  });
  for (std::size_t j = 1; j < words.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (ffmat::left_nullspace(words[i].second + words[j].second).size() != 1) continue;
      auto product_of = [](const std::vector<int>& letters) {
        slp::Product p;
        for (int l : letters) p.push_back({l + 1, 1});
        return p;
      };
      return slp::Slp(static_cast<int>(m.generators().size()), {},
                      {product_of(words[i].first), product_of(words[j].first)});
    }
  fail(ErrorKind::not_found, "no word sum with one-dimensional nullspace up to length " + std::to_string(max_length));
}

struct ConjugacyCertificate {
  bool conjugate = false;
  std::optional<FFMatrix> conjugator;  // x with x^-1 * a_i * x = b_i
};

inline ConjugacyCertificate conjugacy_certificate(const GModule& a, const GModule& b, const slp::Slp& word) {
  if (&a.field() != &b.field() || a.dim() != b.dim() || a.generators().size() != b.generators().size())
    fail(ErrorKind::shape, "modules are not comparable");
  auto sa = standard_basis(a, canonical_seed(a, word));
  auto sb = standard_basis(b, canonical_seed(b, word));
  if (sa.size() != a.dim() || sb.size() != b.dim())
    fail(ErrorKind::non_canonical_seed, "seed does not spin to the whole space");
  if (!(rebase(a, sa).generators() == rebase(b, sb).generators())) return {};
  FFMatrix ba = FFMatrix::from_rows(a.field(), sa, a.dim());
  FFMatrix bb = FFMatrix::from_rows(b.field(), sb, b.dim());
  return {true, ffmat::inverse(ba) * bb};
}

inline bool certify_conjugacy(const GModule& a, const GModule& b, const slp::Slp& word) {
  return conjugacy_certificate(a, b, word).conjugate;
}

struct OrbitResult {
  std::vector<FFVector> orbit;  // sorted
  std::vector<Permutation> perms;
};

inline constexpr std::size_t default_orbit_cap = 1000000;

inline OrbitResult orbit_and_permutation(const GModule& m, const FFVector& seed, std::size_t cap = default_orbit_cap) {
  if (seed.size() != m.dim()) fail(ErrorKind::shape, "seed length differs from module dimension");
  if (seed.is_zero()) fail(ErrorKind::seed, "seed vector is zero");
  std::map<std::vector<Elt>, std::size_t> index;
  std::vector<FFVector> orbit{seed};
  index.emplace(seed.data(), 0);
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : m.generators()) {
      FFVector img = orbit[i] * g;
      if (index.emplace(img.data(), orbit.size()).second) {
        orbit.push_back(std::move(img));
        if (orbit.size() > cap) fail(ErrorKind::cap_exceeded, "orbit exceeds cap " + std::to_string(cap));
      }
    }
  std::sort(orbit.begin(), orbit.end());
  for (std::size_t i = 0; i < orbit.size(); ++i) index[orbit[i].data()] = i;
  OrbitResult r;
  for (const auto& g : m.generators()) {
    std::vector<std::uint32_t> img(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) img[i] = static_cast<std::uint32_t>(index.at((orbit[i] * g).data()));
    r.perms.emplace_back(std::move(img));
  }
  r.orbit = std::move(orbit);
  return r;
}

namespace detail {

struct Reduced {
  ffmat::Echelon ech;
  std::vector<std::size_t> complement;  // non-pivot columns
};

inline Reduced echelon_of(const GModule& m, const std::vector<FFVector>& basis) {
  for (const auto& v : basis)
    if (v.size() != m.dim()) fail(ErrorKind::shape, "basis vector length differs from module dimension");
  Reduced r{ffmat::echelonize(m.field(), basis, m.dim()), {}};
  std::vector<bool> piv(m.dim(), false);
  for (auto p : r.ech.pivots) piv[p] = true;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!piv[c]) r.complement.push_back(c);
  return r;
}

// Subtracts the echelon combination; returns the coefficients used.
inline std::vector<Elt> strip(const Field& f, const ffmat::Echelon& e, FFVector& w) {
  std::vector<Elt> coeff(e.pivots.size(), 0);
  for (std::size_t j = 0; j < e.pivots.size(); ++j) {
    Elt c = w[e.pivots[j]];
    if (!c) continue;
    coeff[j] = c;
    w.add_scaled(e.basis.row(j), f.neg(c));
  }
  return coeff;
}

}  // namespace detail

inline GModule submodule_action(const GModule& m, const std::vector<FFVector>& basis) {
  const Field& f = m.field();
  auto red = detail::echelon_of(m, basis);
  const std::size_t k = red.ech.pivots.size();
  std::vector<FFMatrix> gens;
  for (const auto& g : m.generators()) {
    FFMatrix a(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
      FFVector w = red.ech.basis.row(i) * g;
      auto c = detail::strip(f, red.ech, w);
      if (!w.is_zero()) fail(ErrorKind::invariance, "span is not invariant under the generators");
      for (std::size_t j = 0; j < k; ++j) a.set(i, j, c[j]);
    }
    gens.push_back(std::move(a));
  }
  return GModule(f, k, std::move(gens));
}

inline GModule factor_action(const GModule& m, const std::vector<FFVector>& basis) {
  const Field& f = m.field();
  submodule_action(m, basis);
  auto red = detail::echelon_of(m, basis);
  const auto& comp = red.complement;
  std::vector<FFMatrix> gens;
  for (const auto& g : m.generators()) {
    FFMatrix a(f, comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      FFVector w = g.row(comp[i]);
      detail::strip(f, red.ech, w);
      for (std::size_t j = 0; j < comp.size(); ++j) a.set(i, j, w[comp[j]]);
    }
    gens.push_back(std::move(a));
  }
  return GModule(f, comp.size(), std::move(gens));
}

}  // namespace chartab::meataxe
