#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/ffmat.hpp"
#include "chartab/meataxe/module.hpp"

namespace chartab::meataxe {

inline constexpr int default_chop_budget = 200;
inline constexpr std::size_t split_nullity_limit = 8;

namespace detail {

inline FFMatrix evaluate_poly(const ffmat::poly::Poly& p, const FFMatrix& a) {
  const Field& f = a.field();
  FFMatrix id = FFMatrix::identity(f, a.rows());
  FFMatrix r(f, a.rows(), a.rows());
  for (std::size_t i = p.size(); i-- > 0;) r = r * a + id.scaled(p[i]);
  return r;
}

// Random element of the enveloping algebra: scalar combination of short random words plus a scalar.
template <class Rng>
FFMatrix random_algebra_element(const GModule& m, Rng& rng) {
  const Field& f = m.field();
  const auto& gens = m.generators();
  std::uniform_int_distribution<Elt> coef(1, f.q() - 1);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 4), terms(1, 3);
  FFMatrix sum = FFMatrix::identity(f, m.dim()).scaled(std::uniform_int_distribution<Elt>(0, f.q() - 1)(rng));
  for (int t = terms(rng); t > 0; --t) {
    FFMatrix w = gens[pick(rng)];
    for (int l = len(rng) - 1; l > 0; --l) w = w * gens[pick(rng)];
    sum = sum + w.scaled(coef(rng));
  }
  return sum;
}

// Annihilator in V of a subspace U of the dual: {x : x . u = 0 for u in U}.
inline std::vector<FFVector> annihilator(const Field& f, std::size_t dim, const std::vector<FFVector>& u) {
  return ffmat::left_nullspace(FFMatrix::from_rows(f, u, dim).transpose());
}

enum class Outcome { irreducible, split, inconclusive };

struct Attempt {
  Outcome outcome = Outcome::inconclusive;
  std::vector<FFVector> submodule;
};

// One Norton test with theta = p(a) for an irreducible factor p of the minimal polynomial of a.
inline Attempt try_theta(const GModule& m, const FFMatrix& theta, std::size_t factor_degree) {
  const Field& f = m.field();
  auto nsp = ffmat::left_nullspace(theta);
  if (nsp.empty() || nsp.size() > split_nullity_limit) return {};
  auto s = standard_basis(m, nsp[0]);
  if (s.size() < m.dim()) return {Outcome::split, s};
  // Every kernel vector is an image of nsp[0] under End(M) only when the nullity equals the factor degree.
  if (nsp.size() != factor_degree) return {};
  auto dnsp = ffmat::left_nullspace(theta.transpose());
  std::vector<FFMatrix> tgens;
  for (const auto& g : m.generators()) tgens.push_back(g.transpose());
  auto ds = spin(f, m.dim(), tgens, dnsp[0]);
  if (ds.size() < m.dim()) return {Outcome::split, annihilator(f, m.dim(), ds)};
  return {Outcome::irreducible, {}};
}

template <class Rng>
void chop(const GModule& m, Rng& rng, int budget, std::vector<GModule>& out) {
  if (m.dim() <= 1) {
    if (m.dim() == 1) out.push_back(m);
    return;
  }
  const Field& f = m.field();
  if (m.generators().empty()) {
    for (std::size_t i = 0; i < m.dim(); ++i) out.emplace_back(f, 1, std::vector<FFMatrix>{});
    return;
  }
  for (int attempt = 0; attempt < budget; ++attempt) {
    FFMatrix a = random_algebra_element(m, rng);
    auto mu = ffmat::minimal_polynomial(a);
    std::vector<ffmat::poly::Poly> factors;
    for (auto& [part, mult] : ffmat::poly::squarefree(f, mu))
      for (auto& [g, d] : ffmat::poly::distinct_degree(f, part))
        if (ffmat::poly::degree(g) == d) factors.push_back(g);
    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    for (const auto& p : factors) {
      Attempt r = try_theta(m, evaluate_poly(p, a), static_cast<std::size_t>(ffmat::poly::degree(p)));
      if (r.outcome == Outcome::irreducible) {
        out.push_back(m);
        return;
      }
      if (r.outcome == Outcome::split) {
        chop(submodule_action(m, r.submodule), rng, budget, out);
        chop(factor_action(m, r.submodule), rng, budget, out);
        return;
      }
    }
  }
  fail(ErrorKind::budget, "no irreducibility certificate after " + std::to_string(budget) + " algebra words (dimension " +
                              std::to_string(m.dim()) + ")");
}

}  // namespace detail

// Factors sorted by dimension (stable with respect to discovery order).
template <class Rng = std::mt19937_64>
std::vector<GModule> composition_factors(const GModule& m, int budget = default_chop_budget, Rng rng = Rng(1)) {
  if (m.dim() == 0) fail(ErrorKind::shape, "zero-dimensional module");
  std::vector<GModule> out;
  detail::chop(m, rng, budget, out);
  std::stable_sort(out.begin(), out.end(), [](const GModule& x, const GModule& y) { return x.dim() < y.dim(); });
  return out;
}

}  // namespace chartab::meataxe
