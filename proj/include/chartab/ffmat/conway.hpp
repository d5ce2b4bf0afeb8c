#pragma once

#include <array>
#include <vector>

#include "chartab/error.hpp"

namespace chartab::ffmat {

// Conway polynomials, coefficients from x^0 up to the leading 1.
// Produced by tools/conway_gen.cpp.
struct ConwayEntry {
  int p;
  int n;
  std::vector<int> coeffs;
};

inline const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
      {2, 1, {1, 1}},
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {3, 1, {1, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 2, 1, 0, 2, 0, 1}},
      {3, 7, {1, 0, 2, 0, 0, 0, 0, 1}},
      {3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
      {3, 9, {1, 1, 2, 2, 0, 0, 0, 0, 0, 1}},
      {3, 10, {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}},
      {3, 11, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {3, 12, {2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1}},
      {5, 1, {3, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {5, 4, {2, 4, 4, 0, 1}},
      {5, 5, {3, 4, 0, 0, 0, 1}},
      {5, 6, {2, 0, 1, 4, 1, 0, 1}},
      {5, 7, {3, 3, 0, 0, 0, 0, 0, 1}},
      {5, 8, {2, 4, 3, 0, 1, 0, 0, 0, 1}},
      {5, 9, {3, 1, 0, 2, 0, 0, 0, 0, 0, 1}},
      {5, 10, {2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1}},
      {5, 11, {3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {5, 12, {2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0, 1}},
      {7, 1, {4, 1}},
      {7, 2, {3, 6, 1}},
      {7, 3, {4, 0, 6, 1}},
      {7, 4, {3, 4, 5, 0, 1}},
      {7, 5, {4, 1, 0, 0, 0, 1}},
      {7, 6, {3, 6, 4, 5, 1, 0, 1}},
      {7, 7, {4, 6, 0, 0, 0, 0, 0, 1}},
      {7, 8, {3, 2, 6, 4, 0, 0, 0, 0, 1}},
      {7, 9, {4, 6, 0, 1, 6, 0, 0, 0, 0, 1}},
      {7, 10, {3, 3, 2, 1, 4, 1, 1, 0, 0, 0, 1}},
      {7, 11, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {7, 12, {3, 0, 5, 0, 4, 2, 3, 5, 2, 0, 0, 0, 1}},
  };
  return table;
}

inline const std::vector<int>& conway_polynomial(int p, int n) {
  for (const auto& e : conway_table())
    if (e.p == p && e.n == n) return e.coeffs;
  fail(ErrorKind::field, "no Conway polynomial for GF(" + std::to_string(p) + "^" + std::to_string(n) + ")");
}

}  // namespace chartab::ffmat
