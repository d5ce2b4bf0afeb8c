// Prints character tables of S_n (n <= 5) by the Murnaghan-Nakayama rule as C++ initializers.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <vector>

using Partition = std::vector<int>;

// Partitions of n, starting from [1,1,...,1] and ending with [n].
std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::function<void(int, int, Partition&)> rec = [&](int rest, int maxpart, Partition& cur) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k, cur);
      cur.pop_back();
    }
  };
  Partition cur;
  rec(n, n, cur);
  std::reverse(out.begin(), out.end());
  return out;
}

// Beta-set form: removing a rim hook of length r = moving a bead from x to x - r.
int mn(std::vector<int> beta, const Partition& mu, std::size_t pos) {
  if (pos == mu.size()) return 1;
  int r = mu[pos], total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int x = beta[i], y = x - r;
    if (y < 0 || std::find(beta.begin(), beta.end(), y) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > y && b < x) ++between;
    std::vector<int> next = beta;
    next[i] = y;
    total += (between % 2 ? -1 : 1) * mn(next, mu, pos + 1);
  }
  return total;
}

int main() {
  for (int n = 2; n <= 5; ++n) {
    auto parts = partitions(n);
    std::printf("    {%d,\n     {", n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::printf("%s{", i ? ", " : "");
      for (std::size_t j = 0; j < parts[i].size(); ++j) std::printf("%s%d", j ? ", " : "", parts[i][j]);
      std::printf("}");
    }
    std::printf("},\n     {");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Partition& lambda = parts[i];
      std::vector<int> beta;
      int len = static_cast<int>(lambda.size());
      for (int k = 0; k < len; ++k) beta.push_back(lambda[k] + (len - 1 - k));
      std::printf("%s{", i ? ",\n      " : "");
      for (std::size_t j = 0; j < parts.size(); ++j) std::printf("%s%d", j ? ", " : "", mn(beta, parts[j], 0));
      std::printf("}");
    }
    std::printf("}},\n");
  }
}
