// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "chartab/classify.hpp"
#include "chartab/ffmat.hpp"
#include "chartab/io/slp_text.hpp"
#include "chartab/meataxe.hpp"
#include "chartab/oracle/permgroup.hpp"
#include "chartab/slp.hpp"
#include "chartab/table.hpp"
#include "classify_rows.hpp"
#include "oracle/naive.hpp"
#include "support.hpp"

using namespace chartab;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double slp_seconds = 1.0;
constexpr double classify_seconds = 1.0;
constexpr double table_seconds = 10.0;
constexpr double kernel_seconds = 2.0;
constexpr std::size_t kernel_dim = 4096;
constexpr std::size_t reference_dim = 256;
constexpr int conjugation_trials = 50;
constexpr int norton_seeds = 1000;
const Rational lll_delta(99, 100);

struct Check {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

table::CharacterTable oracle_table(chartab::oracle::PermGroup& g) {
  table::TableHead h = chartab::oracle::table_head_of(g);
  return {h, table::irreducibles_from_head(h, lll_delta)};
}

ffmat::FFMatrix perm_matrix(const ffmat::Field& f, const Permutation& p) {
  std::vector<std::size_t> img(p.images().begin(), p.images().end());
  return ffmat::FFMatrix::permutation(f, img);
}

ffmat::FFMatrix block_diag(const ffmat::FFMatrix& a, const ffmat::FFMatrix& b) {
  ffmat::FFMatrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.get(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.get(i, j));
  return m;
}

ffmat::FFMatrix random_invertible(const ffmat::Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    auto m = ffmat::FFMatrix::random(f, n, n, rng);
    if (ffmat::rank(m) == n) return m;
  }
}

Check slp_regression() {
  Check c;
  auto t0 = Clock::now();
  const std::vector<std::string> xy{"x", "y"}, ab{"a", "b"};
  auto std_words = slp::evaluate(io::load_slp(testsupport::data_path("co2_stdgens.slp")), slp::free_generators(2));
  std::vector<std::string> got;
  for (const auto& w : std_words) got.push_back(w.str(xy));
  const std::vector<std::string> want_std{"y^12", "((y^4*x)^4)^(y*(y*x)^3)"};
  std::vector<std::string> canon_std;
  for (const auto& s : want_std) canon_std.push_back(slp::parse_word(s, xy).str(xy));
  c.require(got == canon_std, "standard generator words differ");

  const std::vector<std::string> want_ker{
      "(b^2*a)^9",        "(b*a*b)^9",         "(a*b^2)^9",           "(b^2*a*b)^9",          "(b*a*b^2)^9",
      "((a*b)^2*a)^9",    "(a*b*(b*a)^2)^9",   "((a*b)^2*b*a)^9",     "(b^3*(b*a)^2)^4",      "(b*(b^2*a)^2)^4",
      "(b^2*a*b^3*a)^4",  "(b*a*b^4*a)^4",     "(b^2*(b*a)^2*b)^4",   "((b^2*a)^2*b)^4",      "(b*a*b^3*a*b)^4",
      "(b*(b*a)^2*b^2)^4", "((b*a*b)^2*b)^4",  "((b^2*a)^2*b*a)^12",  "(b*(b*a)^2*b^2*a)^12", "((b*a*b)^2*b*a)^12",
      "((b*a*b)^2*a*b)^12", "((b^2*a)^2*b*a*b*a)^12"};
  auto ker = slp::evaluate(io::load_slp(testsupport::data_path("co2_kernel.slp")), slp::free_generators(2));
  c.require(ker.size() == want_ker.size(), "kernel program has " + std::to_string(ker.size()) + " outputs");
  for (std::size_t i = 0; i < std::min(ker.size(), want_ker.size()); ++i)
    c.require(ker[i].str(ab) == slp::parse_word(want_ker[i], ab).str(ab), "kernel word " + std::to_string(i + 1) + " differs");
  double s = seconds_since(t0);
  c.require(s < slp_seconds, "took " + std::to_string(s) + " s");
  return c;
}

Check classifier_regression() {
  Check c;
  auto t0 = Clock::now();
  auto tree = classify::load_decision_table(testsupport::data_path("class_invariants.json"));
  std::size_t rows = 0;
  for (const auto& row : classify_rows::label_rows()) {
    classify_rows::ScriptedProvider pr(row.values);
    std::string got;
    try {
      got = classify::identify_class(pr, tree, row.order);
    } catch (const std::exception& e) {
      got = e.what();
    }
    c.require(got == row.label, "order " + std::to_string(row.order) + ": expected " + row.label + ", got " + got);
    ++rows;
  }
  for (const auto& row : classify_rows::error_rows()) {
    classify_rows::ScriptedProvider pr(row.values);
    auto kind = testsupport::kind_of([&] { classify::identify_class(pr, tree, row.order); });
    c.require(kind == row.error, "order " + std::to_string(row.order) + ": expected error " + kind_name(row.error));
    ++rows;
  }
  double s = seconds_since(t0);
  c.require(s < classify_seconds, "took " + std::to_string(s) + " s");
  c.note = c.ok ? std::to_string(rows) + " rows" : c.note;
  return c;
}

Check contained_maps_count() {
  Check c;
  table::ClassMap m({{0}, {1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}});
  auto maps = table::contained_maps(m);
  c.require(maps.size() == 32, std::to_string(maps.size()) + " maps");
  c.require(std::is_sorted(maps.begin(), maps.end()), "not in lexicographic order");
  c.require(std::set<std::vector<int>>(maps.begin(), maps.end()).size() == maps.size(), "duplicates");
  return c;
}

Check table_pipeline() {
  Check c;
  for (auto g : {chartab::oracle::groups::alternating(5), chartab::oracle::groups::symmetric(4)}) {
    auto t0 = Clock::now();
    auto t = oracle_table(g);
    double s = seconds_since(t0);
    auto rep = table::verify_orthogonality(t);
    c.require(rep.ok(), g.name() + ": " + (rep.ok() ? "" : rep.violations[0]));
    c.require(s < table_seconds, g.name() + " took " + std::to_string(s) + " s");
  }
  return c;
}

Check central_extension() {
  Check c;
  auto v4g = chartab::oracle::groups::klein_four();
  auto v4 = oracle_table(v4g);
  table::ClassFunction faithful{cyclo::Cyclotomic(2), {}, {}, {}};
  auto q8 = table::build_central_extension_table(v4, {}, faithful);
  c.require(q8.head.ncls() == 5, std::to_string(q8.head.ncls()) + " classes");
  std::multiset<BigInt> degrees;
  BigInt sum = 0;
  for (const auto& chi : q8.irr) {
    degrees.insert(chi[0].integer());
    sum += chi[0].integer() * chi[0].integer();
  }
  c.require(degrees == std::multiset<BigInt>{1, 1, 1, 1, 2}, "degree multiset");
  c.require(sum == 8, "squared degrees sum to " + to_string(sum));
  c.require(table::verify_orthogonality(q8).ok(), "orthogonality");
  auto qg = chartab::oracle::groups::quaternion8();
  auto oq = chartab::oracle::table_head_of(qg);
  auto key = [](const table::TableHead& t) {
    std::vector<std::pair<std::int64_t, BigInt>> k;
    for (std::size_t i = 0; i < t.ncls(); ++i) k.emplace_back(t.orders[i], t.centralizers[i]);
    std::sort(k.begin(), k.end());
    return k;
  };
  c.require(key(q8.head) == key(oq) && q8.head.size == oq.size, "head differs from the oracle quaternion group");
  return c;
}

Check congruence_completion() {
  Check c;
  auto c15 = chartab::oracle::groups::cyclic(15);
  auto h = chartab::oracle::table_head_of(c15);
  int gen = -1;
  for (std::size_t i = 0; i < h.ncls(); ++i)
    if (h.orders[i] == 15) gen = static_cast<int>(i);
  const int cube = table::class_of_power(h, gen, 3), fifth = table::class_of_power(h, gen, 5);
  for (long v = -7; v <= 7; ++v) {
    table::PartialCharacter chi(h.ncls(), BigInt(0));
    chi[gen] = std::nullopt;
    chi[cube] = BigInt(v);
    chi[fifth] = BigInt(v);
    auto full = table::complete_by_congruences(h, chi, {3, 5}, 7);
    c.require(full[gen] == cyclo::Cyclotomic(v), "value " + std::to_string(v) + " not recovered");
  }
  table::PartialCharacter zero(h.ncls(), BigInt(0));
  zero[gen] = std::nullopt;
  c.require(testsupport::kind_of([&] { table::complete_by_congruences(h, zero, {3, 5}, 7, 10); }) == ErrorKind::under_determined,
            "insufficient norm budget accepted");
  return c;
}

Check fusion_inference() {
  Check c;
  auto a5 = chartab::oracle::groups::alternating(5);
  chartab::oracle::PermGroup a4(5, {Permutation::from_cycles(5, {{1, 2, 3}}), Permutation::from_cycles(5, {{2, 3, 4}})}, "A4");
  auto big = oracle_table(a5);
  auto sub = oracle_table(a4);
  auto fus = table::possible_class_fusions(sub, big.head, big.irr);
  auto truth = chartab::oracle::subgroup_fusion(a4, a5);
  c.require(std::find(fus.begin(), fus.end(), truth) != fus.end(), "oracle fusion missing");
  for (auto g : {chartab::oracle::groups::alternating(5), chartab::oracle::groups::symmetric(4)}) {
    auto t = oracle_table(g);
    for (int p : t.head.required_primes()) {
      auto stripped = t.head;
      stripped.powermaps.erase(p);
      auto maps = table::possible_power_maps(stripped, p, std::nullopt, t.irr);
      c.require(maps.size() == 1, g.name() + " p=" + std::to_string(p) + ": " + std::to_string(maps.size()) + " maps");
      if (maps.size() == 1) c.require(maps[0].determined() == t.head.powermaps.at(p), g.name() + " p=" + std::to_string(p) + " wrong map");
    }
  }
  return c;
}

Check conjugacy_certificate() {
  Check c;
  std::mt19937_64 rng(8);
  const auto& f = ffmat::field(2);
  const std::size_t n = 12;
  meataxe::GModule a(f, n, {random_invertible(f, n, rng), random_invertible(f, n, rng)});
  slp::Slp word = meataxe::find_seed_word(a, 4);
  c.require(ffmat::left_nullspace(meataxe::algebra_element(a, word)).size() == 1, "seed word nullspace is not 1-dimensional");
  for (int t = 0; t < conjugation_trials && c.ok; ++t) {
    auto x = random_invertible(f, n, rng);
    auto xi = ffmat::inverse(x);
    meataxe::GModule b(f, n, {xi * a.generators()[0] * x, xi * a.generators()[1] * x});
    auto cert = meataxe::conjugacy_certificate(a, b, word);
    c.require(cert.conjugate && meataxe::certify_conjugacy(a, b, word), "trial " + std::to_string(t) + " not certified");
    if (!cert.conjugate) break;
    auto ci = ffmat::inverse(*cert.conjugator);
    for (std::size_t i = 0; i < 2; ++i)
      c.require(ci * a.generators()[i] * *cert.conjugator == b.generators()[i], "conjugator check failed");
  }
  meataxe::GModule bad(f, n, {a.generators()[0] * a.generators()[0], a.generators()[1]});
  bool rejected = false;
  try {
    rejected = !meataxe::certify_conjugacy(a, bad, word);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::non_canonical_seed;
  }
  c.require(rejected, "perturbed pair accepted");
  return c;
}

Check composition_factors() {
  Check c;
  const auto& f = ffmat::field(2);
  auto dims = [](const std::vector<meataxe::GModule>& fs) {
    std::multiset<std::size_t> d;
    for (const auto& x : fs) d.insert(x.dim());
    return d;
  };
  auto spot_check = [&](const meataxe::GModule& m) {
    std::mt19937_64 rng(1000);
    for (int s = 0; s < norton_seeds; ++s) {
      ffmat::FFVector v(m.field(), m.dim());
      for (std::size_t i = 0; i < m.dim(); ++i) v[i] = static_cast<ffmat::Elt>(rng() % m.field().q());
      if (v.is_zero()) continue;
      if (meataxe::standard_basis(m, v).size() != m.dim()) return false;
    }
    return true;
  };
  meataxe::GModule natural(f, 3, {perm_matrix(f, Permutation::from_cycles(3, {{1, 2}})), perm_matrix(f, Permutation::from_cycles(3, {{1, 2, 3}}))});
  auto cf = meataxe::composition_factors(natural);
  c.require(dims(cf) == std::multiset<std::size_t>{1, 2}, "natural module factors");
  auto two0 = ffmat::FFMatrix::from_ints(f, {{0, 1}, {1, 0}}), two1 = ffmat::FFMatrix::from_ints(f, {{0, 1}, {1, 1}});
  meataxe::GModule doubled(f, 4, {block_diag(two0, two0), block_diag(two1, two1)});
  auto cf2 = meataxe::composition_factors(doubled);
  c.require(dims(cf2) == std::multiset<std::size_t>{2, 2}, "doubled module factors");
  for (const auto& x : cf) c.require(spot_check(x), "invariant subspace found in a factor");
  for (const auto& x : cf2) c.require(spot_check(x), "invariant subspace found in a factor");
  return c;
}

Check gf2_kernels() {
  Check c;
  std::mt19937_64 rng(4096);
  const auto& f = ffmat::field(2);
  auto a = ffmat::FFMatrix::random(f, kernel_dim, kernel_dim, rng);
  auto b = ffmat::FFMatrix::random(f, kernel_dim, kernel_dim, rng);
  auto t0 = Clock::now();
  auto prod = a * b;
  double mul = seconds_since(t0);
  t0 = Clock::now();
  std::size_t r = ffmat::rank(a);
  double rk = seconds_since(t0);
  c.require(prod.rows() == kernel_dim && r <= kernel_dim, "shape");
  c.require(mul < kernel_seconds, "multiply took " + std::to_string(mul) + " s");
  c.require(rk < kernel_seconds, "rank took " + std::to_string(rk) + " s");
  auto sa = ffmat::FFMatrix::random(f, reference_dim, reference_dim, rng);
  auto sb = ffmat::FFMatrix::random(f, reference_dim, reference_dim, rng);
  c.require(::oracle::to_ints(sa * sb) == ::oracle::multiply(::oracle::to_ints(sa), ::oracle::to_ints(sb), 2), "product differs from reference");
  c.require(ffmat::rank(sa) == ::oracle::rank(::oracle::to_ints(sa), 2), "rank differs from reference");
  if (c.ok) c.note = "multiply " + std::to_string(mul) + " s, rank " + std::to_string(rk) + " s";
  return c;
}

Check brauer_values() {
  Check c;
  const auto& f = ffmat::field(2);
  for (std::size_t d : {1u, 4u, 9u})
    c.require(ffmat::brauer_character_value(ffmat::FFMatrix::identity(f, d)) == cyclo::Cyclotomic(static_cast<long>(d)), "identity");
  c.require(ffmat::brauer_character_value(perm_matrix(f, Permutation::from_cycles(3, {{1, 2, 3}}))) == cyclo::Cyclotomic(0), "3-cycle");
  // Each 5-cycle contributes the full sum of fifth roots of unity, each fixed point a 1.
  cyclo::Cyclotomic root_sum;
  for (int k = 0; k < 5; ++k) root_sum += cyclo::Cyclotomic::root_of_unity(5, k);
  for (std::size_t n : {5u, 6u, 8u, 10u, 12u}) {
    std::vector<std::vector<std::size_t>> cycles{{1, 2, 3, 4, 5}};
    if (n >= 10) cycles.push_back({6, 7, 8, 9, 10});
    auto g = Permutation::from_cycles(n, cycles);
    cyclo::Cyclotomic expect = cyclo::Cyclotomic(static_cast<long>(g.fixed_points()));
    for (std::size_t k = 0; k < cycles.size(); ++k) expect += root_sum;
    auto got = ffmat::brauer_character_value(perm_matrix(f, g));
    c.require(got == expect && got == cyclo::Cyclotomic(static_cast<long>(g.fixed_points())), "order-5 permutation on " + std::to_string(n) + " points");
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"slp regression", slp_regression},
      {"classifier regression", classifier_regression},
      {"contained maps count", contained_maps_count},
      {"oracle character table pipeline", table_pipeline},
      {"central extension builder", central_extension},
      {"congruence completion", congruence_completion},
      {"fusion and power map inference", fusion_inference},
      {"conjugacy certificate", conjugacy_certificate},
      {"composition factors", composition_factors},
      {"GF(2) kernel performance", gf2_kernels},
      {"Brauer character values", brauer_values},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    failed += !c.ok;
    std::printf("criterion %2zu %s: %s%s%s\n", i + 1, c.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), c.note.empty() ? "" : " | ",
                c.note.c_str());
  }
  return failed ? 1 : 0;
}
