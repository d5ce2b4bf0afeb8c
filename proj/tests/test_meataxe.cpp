#include <gtest/gtest.h>

#include <map>
#include <random>

#include "chartab/meataxe.hpp"
#include "oracle/naive.hpp"
#include "support.hpp"

using namespace chartab;
using namespace chartab::meataxe;
using testsupport::kind_of;

namespace {

FFMatrix perm_matrix(const Field& f, const Permutation& p) {
  std::vector<std::size_t> img(p.images().begin(), p.images().end());
  return FFMatrix::permutation(f, img);
}

GModule s3_natural(int p) {
  const auto& f = ffmat::field(p);
  return GModule(f, 3,
                 {perm_matrix(f, Permutation::from_cycles(3, {{1, 2}})), perm_matrix(f, Permutation::from_cycles(3, {{1, 2, 3}}))});
}

// The 2-dimensional irreducible S3 module over GF(2) (action on the sum-zero plane).
GModule s3_two(const Field& f) {
  return GModule(f, 2, {FFMatrix::from_ints(f, {{0, 1}, {1, 0}}), FFMatrix::from_ints(f, {{0, 1}, {1, 1}})});
}

FFMatrix block_diag(const FFMatrix& a, const FFMatrix& b) {
  FFMatrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.get(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.get(i, j));
  return m;
}

FFMatrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = FFMatrix::random(f, n, n, rng);
    if (ffmat::rank(m) == n) return m;
  }
}

std::vector<oracle::IntMat> int_gens(const GModule& m) {
  std::vector<oracle::IntMat> out;
  for (const auto& g : m.generators()) out.push_back(oracle::to_ints(g));
  return out;
}

oracle::IntVec ints(const FFVector& v) { return oracle::IntVec(v.data().begin(), v.data().end()); }

bool span_invariant(const GModule& m, const std::vector<FFVector>& basis) {
  ffmat::EchelonSpace s(m.field(), m.dim());
  for (const auto& v : basis) s.add(v);
  for (const auto& v : basis)
    for (const auto& g : m.generators())
      if (!s.contains(v * g)) return false;
  return true;
}

}  // namespace

TEST(StandardBasis, Examples) {
  const auto& f2 = ffmat::field(2);
  GModule one(f2, 1, {FFMatrix::identity(f2, 1)});
  auto s = FFVector::from_ints(f2, {1});
  EXPECT_EQ(standard_basis(one, s), std::vector<FFVector>{s});

  const auto& f = ffmat::field(2);
  GModule c3(f, 3, {perm_matrix(f, Permutation::from_cycles(3, {{1, 2, 3}}))});
  auto ones = FFVector::from_ints(f, {1, 1, 1});
  EXPECT_EQ(standard_basis(c3, ones), std::vector<FFVector>{ones});

  GModule s3 = s3_natural(2);
  auto e1 = FFVector::from_ints(f, {1, 0, 0});
  auto b = standard_basis(s3, e1);
  EXPECT_EQ(b.size(), 3u);
  // Oracle: the submodule generated by e1 has 2^3 elements.
  EXPECT_EQ(oracle::submodule_elements(ints(e1), int_gens(s3), 2).size(), 8u);
  EXPECT_EQ(b[0], e1);
  EXPECT_EQ(b[1], e1 * s3.generators()[0]);
  EXPECT_EQ(kind_of([&] { standard_basis(s3, FFVector(f, 3)); }), ErrorKind::seed);
}

TEST(StandardBasis, SpanIsInvariantAndMatchesOracle) {
  std::mt19937_64 rng(4);
  for (int p : {2, 3}) {
    const auto& f = ffmat::field(p);
    for (int trial = 0; trial < 10; ++trial) {
      GModule m = trial % 2 ? s3_natural(p) : GModule(f, 4, {random_invertible(f, 4, rng), random_invertible(f, 4, rng)});
      FFVector v = FFVector::from_ints(f, {1, static_cast<long>(trial % p), 0, 1});
      if (m.dim() == 3) v = FFVector::from_ints(f, {static_cast<long>(trial % p), 1, 0});
      auto b = standard_basis(m, v);
      EXPECT_TRUE(span_invariant(m, b));
      std::size_t expect = oracle::submodule_elements(ints(v), int_gens(m), p).size();
      std::size_t got = 1;
      for (std::size_t i = 0; i < b.size(); ++i) got *= static_cast<std::size_t>(p);
      EXPECT_EQ(got, expect);
    }
  }
}

TEST(Rebase, PreservesInvariants) {
  std::mt19937_64 rng(9);
  const auto& f = ffmat::field(3);
  GModule m(f, 5, {random_invertible(f, 5, rng), random_invertible(f, 5, rng)});
  std::vector<FFVector> id;
  for (std::size_t i = 0; i < 5; ++i) id.push_back(FFVector::unit(f, 5, i));
  EXPECT_EQ(rebase(m, id).generators(), m.generators());

  FFMatrix b = random_invertible(f, 5, rng);
  GModule r = rebase(m, b.row_list());
  GModule back = rebase(r, ffmat::inverse(b).row_list());
  EXPECT_EQ(back.generators(), m.generators());
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& g = m.generators()[i];
    const auto& h = r.generators()[i];
    EXPECT_EQ(ffmat::trace(g), ffmat::trace(h));
    EXPECT_EQ(ffmat::element_order(g), ffmat::element_order(h));
    EXPECT_EQ(ffmat::rank(g - FFMatrix::identity(f, 5)), ffmat::rank(h - FFMatrix::identity(f, 5)));
  }
  std::vector<FFVector> singular(5, FFVector::unit(f, 5, 0));
  EXPECT_EQ(kind_of([&] { rebase(m, singular); }), ErrorKind::singular);
}

TEST(Conjugacy, CertifiesRandomConjugates) {
  std::mt19937_64 rng(21);
  const auto& f = ffmat::field(2);
  GModule a(f, 10, {random_invertible(f, 10, rng), random_invertible(f, 10, rng)});
  slp::Slp word = find_seed_word(a, 4);
  EXPECT_TRUE(certify_conjugacy(a, a, word));
  for (int trial = 0; trial < 20; ++trial) {
    FFMatrix x = random_invertible(f, 10, rng);
    FFMatrix xi = ffmat::inverse(x);
    GModule b(f, 10, {xi * a.generators()[0] * x, xi * a.generators()[1] * x});
    auto cert = conjugacy_certificate(a, b, word);
    ASSERT_TRUE(cert.conjugate);
    const FFMatrix& c = *cert.conjugator;
    FFMatrix ci = ffmat::inverse(c);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(ci * a.generators()[i] * c, b.generators()[i]);
  }
  GModule bad(f, 10, {a.generators()[0] * a.generators()[0], a.generators()[1]});
  bool refused = false, result = true;
  try {
    result = certify_conjugacy(a, bad, word);
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::non_canonical_seed;
  }
  EXPECT_TRUE(refused || !result);

  slp::Slp unit_word(2, {}, {{{1, 1}}});
  EXPECT_EQ(kind_of([&] { certify_conjugacy(a, a, unit_word); }), ErrorKind::non_canonical_seed);
}

TEST(Orbit, SortedOrbitAndPermutations) {
  const auto& f = ffmat::field(2);
  GModule s3 = s3_natural(2);
  auto r = orbit_and_permutation(s3, FFVector::from_ints(f, {1, 0, 0}));
  ASSERT_EQ(r.orbit.size(), 3u);
  EXPECT_EQ(r.orbit[0], FFVector::from_ints(f, {0, 0, 1}));
  EXPECT_EQ(r.orbit[2], FFVector::from_ints(f, {1, 0, 0}));
  // Sorted orbit is e3 < e2 < e1, so point i corresponds to coordinate 3 - i.
  EXPECT_EQ(r.perms[0], Permutation::from_cycles(3, {{2, 3}}));
  EXPECT_EQ(r.perms[1], Permutation::from_cycles(3, {{3, 2, 1}}));
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r.orbit[i] * s3.generators()[g], r.orbit[r.perms[g](i)]);

  auto fixed = orbit_and_permutation(s3, FFVector::from_ints(f, {1, 1, 1}));
  EXPECT_EQ(fixed.orbit.size(), 1u);
  for (const auto& p : fixed.perms) EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(kind_of([&] { orbit_and_permutation(s3, FFVector::from_ints(f, {1, 0, 0}), 2); }), ErrorKind::cap_exceeded);

  std::mt19937_64 rng(2);
  const auto& f3 = ffmat::field(3);
  GModule m(f3, 4, {random_invertible(f3, 4, rng), random_invertible(f3, 4, rng)});
  auto big = orbit_and_permutation(m, FFVector::from_ints(f3, {1, 0, 2, 0}));
  EXPECT_TRUE(std::is_sorted(big.orbit.begin(), big.orbit.end()));
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t i = 0; i < big.orbit.size(); ++i)
      EXPECT_EQ(big.orbit[i] * m.generators()[g], big.orbit[big.perms[g](i)]);
}

TEST(InducedActions, SubAndFactor) {
  const auto& f3 = ffmat::field(3);
  GModule s3 = s3_natural(3);
  GModule line = submodule_action(s3, {FFVector::from_ints(f3, {1, 1, 1})});
  ASSERT_EQ(line.dim(), 1u);
  for (const auto& g : line.generators()) EXPECT_TRUE(g.is_identity());

  std::vector<FFVector> plane{FFVector::from_ints(f3, {1, -1, 0}), FFVector::from_ints(f3, {0, 1, -1})};
  GModule pm = submodule_action(s3, plane);
  ASSERT_EQ(pm.dim(), 2u);
  // Oracle: restriction of a permutation to the sum-zero plane has trace (#fixed points - 1).
  EXPECT_EQ(ffmat::trace_lift(pm.generators()[0]), 0);
  EXPECT_EQ(ffmat::trace_lift(pm.generators()[1]), 2);
  EXPECT_EQ(kind_of([&] { submodule_action(s3, {FFVector::from_ints(f3, {1, 0, 0})}); }), ErrorKind::invariance);

  std::vector<FFVector> full;
  for (std::size_t i = 0; i < 3; ++i) full.push_back(FFVector::unit(f3, 3, i));
  EXPECT_EQ(submodule_action(s3, full).generators(), s3.generators());
  EXPECT_EQ(factor_action(s3, full).dim(), 0u);
  EXPECT_EQ(factor_action(s3, {}).generators(), s3.generators());

  const auto& f2 = ffmat::field(2);
  GModule s32 = s3_natural(2);
  std::vector<FFVector> plane2{FFVector::from_ints(f2, {1, 1, 0}), FFVector::from_ints(f2, {0, 1, 1})};
  GModule q = factor_action(s32, plane2);
  ASSERT_EQ(q.dim(), 1u);
  for (const auto& g : q.generators()) EXPECT_TRUE(g.is_identity());
  EXPECT_EQ(kind_of([&] { factor_action(s32, {FFVector::from_ints(f2, {1, 0, 0})}); }), ErrorKind::invariance);
}

namespace {

void expect_certified(const GModule& m) {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<Elt> d(0, m.field().q() - 1);
  for (int s = 0; s < 1000; ++s) {
    FFVector v(m.field(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) v[i] = d(rng);
    if (v.is_zero()) continue;
    ASSERT_EQ(standard_basis(m, v).size(), m.dim());
  }
}

std::multiset<std::size_t> dims(const std::vector<GModule>& fs) {
  std::multiset<std::size_t> out;
  for (const auto& x : fs) out.insert(x.dim());
  return out;
}

}  // namespace

TEST(CompositionFactors, SmallModules) {
  const auto& f2 = ffmat::field(2);
  GModule one(f2, 1, {FFMatrix::identity(f2, 1)});
  EXPECT_EQ(composition_factors(one).size(), 1u);

  auto cf = composition_factors(s3_natural(2));
  EXPECT_EQ(dims(cf), (std::multiset<std::size_t>{1, 2}));
  for (const auto& x : cf) {
    expect_certified(x);
    EXPECT_TRUE(oracle::irreducible(int_gens(x), x.dim(), 2));
  }

  GModule two = s3_two(f2);
  GModule doubled(f2, 4,
                  {block_diag(two.generators()[0], two.generators()[0]), block_diag(two.generators()[1], two.generators()[1])});
  auto cf2 = composition_factors(doubled);
  EXPECT_EQ(dims(cf2), (std::multiset<std::size_t>{2, 2}));
  for (const auto& x : cf2) expect_certified(x);
}

TEST(CompositionFactors, RandomExtensionsMatchOracle) {
  std::mt19937_64 rng(77);
  for (int p : {2, 3}) {
    const auto& f = ffmat::field(p);
    for (int trial = 0; trial < 6; ++trial) {
      // Block upper-triangular generators: a 2-dim submodule and a 3-dim quotient.
      std::vector<FFMatrix> gens;
      for (int g = 0; g < 2; ++g) {
        FFMatrix top = random_invertible(f, 3, rng), bottom = random_invertible(f, 2, rng);
        FFMatrix m = block_diag(top, bottom);
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 3; j < 5; ++j) m.set(i, j, rng() % p);
        gens.push_back(m);
      }
      GModule m(f, 5, gens);
      auto cf = composition_factors(m);
      std::size_t total = 0;
      for (const auto& x : cf) {
        total += x.dim();
        EXPECT_TRUE(oracle::irreducible(int_gens(x), x.dim(), p));
      }
      EXPECT_EQ(total, 5u);
    }
  }
  // A module with an irreducible factor over a non-splitting field still certifies.
  const auto& f2 = ffmat::field(2);
  FFMatrix c3 = FFMatrix::from_ints(f2, {{0, 1}, {1, 1}});
  auto cf = composition_factors(GModule(f2, 2, {c3}));
  ASSERT_EQ(cf.size(), 1u);
  EXPECT_EQ(cf[0].dim(), 2u);
}

TEST(KernelGenerators, CyclicAndSplitExtension) {
  auto g4 = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  auto g2 = Permutation::from_cycles(2, {{1, 2}});
  auto res = kernel_generators_by_order_mismatch<Permutation, Permutation>({g4}, {g2}, 2, 1, 3);
  ASSERT_EQ(res.size(), 1u);
  EXPECT_EQ(res[0].word, slp::FreeWord::generator(0));
  EXPECT_EQ(res[0].power, 2u);
  EXPECT_EQ(res[0].element, g4 * g4);

  EXPECT_EQ(kind_of([&] { kernel_generators_by_order_mismatch<Permutation, Permutation>({g4}, {g4}, 2, 1, 4); }),
            ErrorKind::not_found);

  // 2^3:3 on six points versus its image in the cyclic group of order 3.
  auto a = Permutation::from_cycles(6, {{1, 2}});
  auto b = Permutation::from_cycles(6, {{1, 3, 5}, {2, 4, 6}});
  auto qa = Permutation(3), qb = Permutation::from_cycles(3, {{1, 2, 3}});
  auto ker = kernel_generators_by_order_mismatch<Permutation, Permutation>({a, b}, {qa, qb}, 2, 3, 6);
  ASSERT_EQ(ker.size(), 3u);
  // Oracle closure: the three elements generate a group of order 8 consisting of involutions fixing each pair.
  std::set<Permutation> closure{Permutation(6)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto x : std::vector<Permutation>(closure.begin(), closure.end()))
      for (const auto& k : ker) grew |= closure.insert(x * k.element).second;
  }
  EXPECT_EQ(closure.size(), 8u);
  for (const auto& x : closure) {
    EXPECT_EQ((x * x).is_identity(), true);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(x(i) / 2, i / 2);
  }
  for (const auto& k : ker)
    EXPECT_EQ(group_power(slp::substitute(k.word, std::vector<Permutation>{a, b}), static_cast<long>(k.power)), k.element);
}
