// Prints the Conway polynomial table for p in {2,3,5,7}, n <= 12.
// Candidates are walked in Conway order; the constant term is pinned by the
// norm condition and subfield compatibility is tested before primitivity.
#include <cstdint>
#include <cstdio>
#include <map>
#include <vector>

using u64 = std::uint64_t;
using Poly = std::vector<int>;

namespace {

int P, N;
Poly F;

Poly mulmod(const Poly& a, const Poly& b) {
  std::vector<int> r(2 * N - 1, 0);
  for (int i = 0; i < N; ++i)
    if (a[i])
      for (int j = 0; j < N; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % P;
  for (int d = 2 * N - 2; d >= N; --d) {
    int c = r[d];
    if (!c) continue;
    r[d] = 0;
    for (int i = 0; i < N; ++i) r[d - N + i] = ((r[d - N + i] - c * F[i]) % P + P) % P;
  }
  r.resize(N);
  return r;
}

Poly powmod(Poly b, u64 e) {
  Poly r(N, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (int i = 1; i < N; ++i)
    if (a[i]) return false;
  return true;
}

bool is_zero(const Poly& a) {
  for (int c : a)
    if (c) return false;
  return true;
}

std::vector<u64> prime_factors(u64 m) {
  std::vector<u64> f;
  for (u64 q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      f.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) f.push_back(m);
  return f;
}

u64 ipow(u64 b, int e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

std::map<std::pair<int, int>, Poly> table;

Poly eval_at(const Poly& g, const Poly& a) {
  Poly r(N, 0);
  for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
    r = mulmod(r, a);
    r[0] = (r[0] + g[i]) % P;
  }
  return r;
}

}  // namespace

int main() {
  for (int p : {2, 3, 5, 7}) {
    for (int n = 1; n <= 12; ++n) {
      P = p;
      N = n;
      u64 order = ipow(p, n) - 1;
      auto pf = prime_factors(order);
      std::vector<int> maxsub;
      for (int m = n - 1; m >= 1; --m)
        if (n % m == 0) {
          bool maximal = true;
          for (int m2 : maxsub)
            if (m2 % m == 0) maximal = false;
          if (maximal) maxsub.push_back(m);
        }
      int a0 = n == 1 ? -1 : (p - table[{p, 1}][0]) % p;
      std::vector<int> a(n, 0);
      bool found = false;
      u64 total = ipow(p, n);
      for (u64 idx = 0; idx < total && !found; ++idx) {
        u64 t = idx;
        for (int i = 0; i < n; ++i) {
          a[i] = static_cast<int>(t % p);
          t /= p;
        }
        if (a[0] == 0 || (a0 >= 0 && a[0] != a0)) continue;
        F.assign(n + 1, 0);
        F[n] = 1;
        for (int i = 0; i < n; ++i) {
          int s = ((n - i) % 2) ? -1 : 1;
          F[i] = ((s * a[i]) % p + p) % p;
        }
        Poly x(N, 0);
        if (N > 1)
          x[1] = 1;
        else
          x[0] = (p - F[0]) % p;
        bool ok = true;
        for (int m : maxsub) {
          Poly y = powmod(x, order / (ipow(p, m) - 1));
          if (!is_zero(eval_at(table[{p, m}], y))) {
            ok = false;
            break;
          }
        }
        if (!ok || !is_one(powmod(x, order))) continue;
        for (u64 r : pf)
          if (is_one(powmod(x, order / r))) {
            ok = false;
            break;
          }
        if (!ok) continue;
        found = true;
        table[{p, n}] = F;
      }
      if (!found) {
        std::fprintf(stderr, "no polynomial for %d^%d\n", p, n);
        return 1;
      }
      std::printf("    {%d, %d, {", p, n);
      for (int i = 0; i <= n; ++i) std::printf("%s%d", i ? ", " : "", table[{p, n}][i]);
      std::printf("}},\n");
      std::fflush(stdout);
    }
  }
}
