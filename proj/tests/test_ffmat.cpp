#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "chartab/ffmat.hpp"
#include "oracle/naive.hpp"

using namespace chartab::ffmat;
using chartab::Error;
using chartab::ErrorKind;
using chartab::cyclo::Cyclotomic;
using chartab::cyclo::E;

namespace {

FFMatrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    FFMatrix m = FFMatrix::random(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

FFMatrix cycle_matrix(const Field& f, std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return FFMatrix::permutation(f, img);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return static_cast<ErrorKind>(-1);
}

// Polynomial helpers over GF(p) on int vectors for the Conway check.
using IPoly = std::vector<int>;

IPoly imulmod(const IPoly& a, const IPoly& b, const IPoly& f, int p) {
  int n = static_cast<int>(f.size()) - 1;
  std::vector<long> r(2 * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i + j] += static_cast<long>(a[i]) * b[j];
  for (int d = 2 * n - 1; d >= n; --d) {
    long c = r[d] % p;
    r[d] = 0;
    for (int i = 0; i < n; ++i) r[d - n + i] -= c * f[i];
  }
  IPoly out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(((r[i] % p) + p) % p);
  return out;
}

IPoly ipowmod(IPoly b, std::uint64_t e, const IPoly& f, int p) {
  int n = static_cast<int>(f.size()) - 1;
  IPoly r(n, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = imulmod(r, b, f, p);
    b = imulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

bool ione(const IPoly& a) {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

}  // namespace

TEST(Conway, KnownValues) {
  EXPECT_EQ(conway_polynomial(2, 8), (std::vector<int>{1, 0, 1, 1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(conway_polynomial(3, 6), (std::vector<int>{2, 2, 1, 0, 2, 0, 1}));
  EXPECT_EQ(conway_polynomial(5, 3), (std::vector<int>{3, 3, 0, 1}));
  EXPECT_EQ(conway_polynomial(7, 2), (std::vector<int>{3, 6, 1}));
  EXPECT_EQ(conway_polynomial(2, 1), (std::vector<int>{1, 1}));
}

TEST(Conway, TableIsPrimitiveAndCompatible) {
  for (const auto& e : conway_table()) {
    const int p = e.p, n = e.n;
    const IPoly& f = e.coeffs;
    ASSERT_EQ(static_cast<int>(f.size()), n + 1);
    std::uint64_t order = 1;
    for (int i = 0; i < n; ++i) order *= p;
    --order;
    IPoly x(n, 0);
    if (n > 1)
      x[1] = 1;
    else
      x[0] = (p - f[0]) % p;
    EXPECT_TRUE(ione(ipowmod(x, order, f, p))) << p << "^" << n;
    for (auto r : chartab::prime_divisors(static_cast<std::int64_t>(order)))
      EXPECT_FALSE(ione(ipowmod(x, order / r, f, p))) << p << "^" << n << " r=" << r;
    for (int m = 1; m < n; ++m) {
      if (n % m) continue;
      std::uint64_t sub = 1;
      for (int i = 0; i < m; ++i) sub *= p;
      IPoly y = ipowmod(x, order / (sub - 1), f, p);
      const IPoly& g = conway_polynomial(p, m);
      IPoly acc(n, 0);
      for (int i = m; i >= 0; --i) {
        acc = imulmod(acc, y, f, p);
        acc[0] = (acc[0] + g[i]) % p;
      }
      for (int c : acc) EXPECT_EQ(c, 0) << p << "^" << n << " over " << m;
    }
  }
}

TEST(Field, ExtensionArithmetic) {
  for (auto [p, k] : {std::pair{2, 4}, {3, 3}, {5, 2}, {7, 2}, {5, 9}}) {
    const Field& f = field(p, k);
    std::mt19937_64 rng(p * 100 + k);
    for (int t = 0; t < 200; ++t) {
      Elt a = rng() % f.q(), b = rng() % f.q(), c = rng() % f.q();
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    EXPECT_EQ(f.pow(f.generator(), f.q() - 1), 1u);
  }
}

TEST(FFMatrix, MultiplyTrivial) {
  std::mt19937_64 rng(1);
  const Field& f = field(3);
  FFMatrix m = FFMatrix::random(f, 3, 4, rng);
  EXPECT_EQ(FFMatrix::identity(f, 3) * m, m);
  EXPECT_EQ(FFMatrix(f, 2, 3) * m, FFMatrix(f, 2, 4));
  EXPECT_EQ(kind_of([&] { m* m; }), ErrorKind::shape);
  EXPECT_EQ(kind_of([&] { FFMatrix::identity(field(2), 4) * m; }), ErrorKind::shape);
}

TEST(FFMatrix, PackedMultiplyMatchesNaive) {
  std::mt19937_64 rng(64);
  const Field& f = field(2);
  FFMatrix a = FFMatrix::random(f, 64, 64, rng), b = FFMatrix::random(f, 64, 64, rng);
  EXPECT_EQ(oracle::to_ints(a * b), oracle::multiply(oracle::to_ints(a), oracle::to_ints(b), 2));
}

TEST(FFMatrix, PackedKernelsMatchNaiveOnRandomInstances) {
  std::mt19937_64 rng(2024);
  auto& tun = gf2::tuning();
  const std::size_t saved = tun.m4rm_threshold;
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 256, n = 1 + rng() % 256, c = 1 + rng() % 256;
    if (t % 50 == 0) r = n = c = 256;
    // Alternate the dispatch so both the plain and the table kernel are exercised.
    tun.m4rm_threshold = t % 2 ? 1 : 100000;
    const Field& f = field(2);
    FFMatrix a = FFMatrix::random(f, r, n, rng), b = FFMatrix::random(f, n, c, rng);
    if (t % 7 == 0) a = a * FFMatrix(f, n, n);  // rank-deficient case
    EXPECT_EQ(oracle::to_ints(a * b), oracle::multiply(oracle::to_ints(a), oracle::to_ints(b), 2));
    EXPECT_EQ(rank(a), oracle::rank(oracle::to_ints(a), 2));
  }
  tun.m4rm_threshold = saved;
}

TEST(FFMatrix, MultiplyAssociativeAndDistributive) {
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const Field& f = field(p, k);
    std::mt19937_64 rng(p + 10 * k);
    for (int t = 0; t < 10; ++t) {
      FFMatrix a = FFMatrix::random(f, 7, 9, rng), b = FFMatrix::random(f, 9, 5, rng),
               b2 = FFMatrix::random(f, 9, 5, rng), c = FFMatrix::random(f, 5, 6, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + b2), a * b + a * b2);
    }
  }
}

TEST(FFMatrix, PowerAndInverse) {
  std::mt19937_64 rng(3);
  const Field& f3 = field(3);
  FFMatrix m = random_invertible(f3, 6, rng);
  EXPECT_EQ(power(m, 0), FFMatrix::identity(f3, 6));
  EXPECT_EQ(power(m, -1) * m, FFMatrix::identity(f3, 6));
  // Independent check of the inverse by the naive product.
  auto prod = oracle::multiply(oracle::to_ints(inverse(m)), oracle::to_ints(m), 3);
  EXPECT_EQ(prod, oracle::to_ints(FFMatrix::identity(f3, 6)));
  EXPECT_TRUE(power(cycle_matrix(field(2), 3), 3).is_identity());
  EXPECT_EQ(kind_of([&] { power(FFMatrix(f3, 2, 2), -1); }), ErrorKind::singular);
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) EXPECT_EQ(power(m, a + b), power(m, a) * power(m, b));
}

TEST(FFMatrix, Rank) {
  std::mt19937_64 rng(4);
  EXPECT_EQ(rank(FFMatrix::identity(field(5), 7)), 7u);
  EXPECT_EQ(rank(FFMatrix(field(5), 7, 7)), 0u);
  for (int t = 0; t < 20; ++t) {
    FFMatrix m = FFMatrix::random(field(5), 20, 20, rng);
    if (t % 3 == 0) m = m * FFMatrix::random(field(5), 20, 20, rng).block(0, 0, 20, 12) * FFMatrix::random(field(5), 12, 20, rng);
    EXPECT_EQ(rank(m), oracle::rank(oracle::to_ints(m), 5));
  }
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {7, 1}, {2, 2}}) {
    FFMatrix m = FFMatrix::random(field(p, k), 9, 13, rng);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(FFMatrix, LeftNullspace) {
  EXPECT_TRUE(left_nullspace(FFMatrix::identity(field(2), 5)).empty());
  auto z = left_nullspace(FFMatrix(field(3), 3, 3));
  ASSERT_EQ(z.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(z[i], FFVector::unit(field(3), 3, i));
  std::mt19937_64 rng(5);
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
    for (int t = 0; t < 20; ++t) {
      const Field& f = field(p, k);
      FFMatrix m = FFMatrix::random(f, 12, 8, rng);
      if (t % 2) m = m.block(0, 0, 12, 3) * FFMatrix::random(f, 3, 8, rng);
      auto ns = left_nullspace(m);
      EXPECT_EQ(ns.size() + rank(m), m.rows());
      for (const auto& v : ns) EXPECT_TRUE((v * m).is_zero());
      // Echelon ordering with normed leading entries.
      for (std::size_t i = 0; i < ns.size(); ++i) {
        EXPECT_EQ(ns[i][ns[i].leading()], 1u);
        if (i) EXPECT_LT(ns[i - 1].leading(), ns[i].leading());
      }
    }
  }
}

TEST(FFMatrix, TraceLift) {
  EXPECT_EQ(trace_lift(FFMatrix::identity(field(2), 3)), 1);
  EXPECT_EQ(trace_lift(FFMatrix(field(3), 4, 4)), 0);
  EXPECT_EQ(trace_lift(FFMatrix::identity(field(5), 3).scaled(2)), 1);
  EXPECT_EQ(kind_of([] { trace_lift(FFMatrix::identity(field(2, 2), 2)); }), ErrorKind::field);
}

TEST(FFMatrix, ElementOrder) {
  EXPECT_EQ(element_order(FFMatrix::identity(field(7), 4)), 1u);
  FFMatrix companion = FFMatrix::from_ints(field(2), {{0, 1}, {1, 1}});
  EXPECT_EQ(element_order(companion), 3u);
  EXPECT_EQ(element_order(cycle_matrix(field(3), 5)), 5u);
  EXPECT_EQ(kind_of([] { element_order(FFMatrix(field(3), 2, 2)); }), ErrorKind::singular);
  EXPECT_EQ(kind_of([] { element_order(cycle_matrix(field(2), 7), 5); }), ErrorKind::cap_exceeded);
  // Unipotent part: a Jordan block of size 3 over GF(2) has order 4.
  EXPECT_EQ(element_order(FFMatrix::from_ints(field(2), {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}})), 4u);

  std::mt19937_64 rng(6);
  for (auto [p, k] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}}) {
    const Field& f = field(p, k);
    for (int t = 0; t < 8; ++t) {
      FFMatrix m = random_invertible(f, 6, rng);
      std::uint64_t o = element_order(m);
      // Brute-force powering oracle.
      FFMatrix acc = m;
      std::uint64_t brute = 1;
      while (!acc.is_identity()) {
        acc = acc * m;
        ++brute;
      }
      EXPECT_EQ(o, brute);
      for (std::int64_t j : {2, 3, 4, 6, 10}) {
        std::uint64_t expect = o / std::gcd(o, static_cast<std::uint64_t>(j));
        EXPECT_EQ(element_order(power(m, j)), expect);
      }
    }
  }
}

TEST(FFMatrix, SumIntersection) {
  const Field& f2 = field(2);
  std::vector<FFVector> e1 = {FFVector::unit(f2, 3, 0)}, e2 = {FFVector::unit(f2, 3, 1)};
  auto si = sum_intersection(e1, e2);
  EXPECT_EQ(si.sum.size(), 2u);
  EXPECT_TRUE(si.intersection.empty());
  auto same = sum_intersection(e1, e1);
  EXPECT_EQ(same.sum, e1);
  EXPECT_EQ(same.intersection, e1);

  std::mt19937_64 rng(8);
  const Field& f3 = field(3);
  for (int t = 0; t < 30; ++t) {
    auto u = FFMatrix::random(f3, 4, 7, rng).row_list();
    auto w = FFMatrix::random(f3, 4, 7, rng).row_list();
    if (t % 3 == 0) w[0] = u[0] + u[1];
    auto r = sum_intersection(u, w);
    std::size_t du = rank(FFMatrix::from_rows(f3, u, 7)), dw = rank(FFMatrix::from_rows(f3, w, 7));
    EXPECT_EQ(r.sum.size() + r.intersection.size(), du + dw);
    EchelonSpace su(f3, 7), sw(f3, 7);
    for (auto& v : u) su.add(v);
    for (auto& v : w) sw.add(v);
    for (auto& v : r.intersection) {
      EXPECT_TRUE(su.contains(v));
      EXPECT_TRUE(sw.contains(v));
    }
  }
  EXPECT_EQ(kind_of([&] { sum_intersection(e1, {FFVector::unit(f2, 4, 0)}); }), ErrorKind::shape);
}

TEST(FFMatrix, BrauerCharacterValues) {
  EXPECT_EQ(brauer_character_value(FFMatrix::identity(field(2), 5)), Cyclotomic(5));
  EXPECT_EQ(brauer_character_value(cycle_matrix(field(2), 3)), Cyclotomic(0));
  EXPECT_EQ(brauer_character_value(FFMatrix::from_ints(field(3), {{0, 1}, {1, 0}})), Cyclotomic(0));
  // Companion matrix of x^2+x+1: eigenvalues are the two primitive cube roots.
  EXPECT_EQ(brauer_character_value(FFMatrix::from_ints(field(2), {{0, 1}, {1, 1}})), Cyclotomic(-1));
  // A diagonal element of order 4 over GF(5): eigenvalue 2 is E(4) under the Conway embedding.
  FFMatrix d = FFMatrix::from_ints(field(5), {{2, 0}, {0, 1}});
  EXPECT_EQ(brauer_character_value(d), E(4) + Cyclotomic(1));
  EXPECT_EQ(kind_of([] { brauer_character_value(cycle_matrix(field(2), 2)); }), ErrorKind::p_singular);

  // Permutation matrices of p'-order: the value is the number of fixed points.
  std::mt19937_64 rng(12);
  for (int p : {2, 3, 5, 7}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<std::size_t> img(7);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      FFMatrix m = FFMatrix::permutation(field(p), img);
      std::uint64_t o = element_order(m);
      if (o % p == 0) continue;
      long fixed = 0;
      for (std::size_t i = 0; i < 7; ++i) fixed += img[i] == i;
      EXPECT_EQ(brauer_character_value(m), Cyclotomic(fixed));
    }
  }
}
