#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "chartab/parallel.hpp"

// Kernels on bit-packed GF(2) rows: bit j of a row lives in word j/64 at bit j%64.
namespace chartab::ffmat::gf2 {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

inline bool get_bit(const Word* row, std::size_t j) { return (row[j >> 6] >> (j & 63)) & 1u; }
inline void flip_bit(Word* row, std::size_t j) { row[j >> 6] ^= Word{1} << (j & 63); }

inline void xor_into(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

struct Tuning {
  std::size_t m4rm_threshold = 512;
  int table_width = 8;
};

inline Tuning& tuning() {
  static Tuning t;
  return t;
}

// c (r x ?) ^= a (r x n) * b (n x ?), rows [r0, r1) of a, plain row accumulation.
inline void mul_rows_plain(const Word* a, std::size_t sa, const Word* b, std::size_t sb, Word* c, std::size_t n,
                           std::size_t r0, std::size_t r1) {
  for (std::size_t i = r0; i < r1; ++i) {
    const Word* ai = a + i * sa;
    Word* ci = c + i * sb;
    for (std::size_t w = 0; w < sa; ++w) {
      Word bits = ai[w];
      while (bits) {
        std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (j < n) xor_into(ci, b + j * sb, sb);
      }
    }
  }
}

// Method of Four Russians: for each group of `width` rows of b, tabulate all
// 2^width combinations, then add one table row per row of a.
inline void mul_rows_m4rm(const Word* a, std::size_t sa, const Word* b, std::size_t sb, Word* c, std::size_t n,
                          std::size_t r0, std::size_t r1, int width) {
  const std::size_t tsize = std::size_t{1} << width;
  const Word mask = tsize - 1;
  std::vector<Word> table(tsize * sb);
  for (std::size_t kb = 0; kb < n; kb += width) {
    std::size_t w = std::min<std::size_t>(width, n - kb);
    std::size_t used = std::size_t{1} << w;
    std::fill(table.begin(), table.begin() + sb, 0);
    for (std::size_t t = 1; t < used; ++t) {
      std::size_t low = static_cast<std::size_t>(std::countr_zero(t));
      const Word* prev = table.data() + (t & (t - 1)) * sb;
      const Word* brow = b + (kb + low) * sb;
      Word* dst = table.data() + t * sb;
      for (std::size_t x = 0; x < sb; ++x) dst[x] = prev[x] ^ brow[x];
    }
    const std::size_t word = kb >> 6, shift = kb & 63;
    for (std::size_t i = r0; i < r1; ++i) {
      Word bits = a[i * sa + word] >> shift;
      if (shift + width > 64 && word + 1 < sa) bits |= a[i * sa + word + 1] << (64 - shift);
      std::size_t idx = static_cast<std::size_t>(bits & mask & (used - 1));
      if (idx) xor_into(c + i * sb, table.data() + idx * sb, sb);
    }
  }
}

// c = a * b with a: r x n (stride sa), b: n x m (stride sb); c zeroed, stride sb.
inline void multiply(const Word* a, std::size_t sa, const Word* b, std::size_t sb, Word* c, std::size_t r, std::size_t n,
                     std::size_t m) {
  const Tuning& tu = tuning();
  bool four_russians = std::max({r, n, m}) >= tu.m4rm_threshold;
  parallel_chunks(r, 64, [&](std::size_t r0, std::size_t r1) {
    if (four_russians)
      mul_rows_m4rm(a, sa, b, sb, c, n, r0, r1, tu.table_width);
    else
      mul_rows_plain(a, sa, b, sb, c, n, r0, r1);
  });
}

// Gaussian elimination in place on r rows of `cols` bits. With `full`, clears
// above pivots too and leaves the reduced echelon form in the leading rows.
// Returns pivot columns in order.
inline std::vector<std::size_t> eliminate(Word* m, std::size_t stride, std::size_t r, std::size_t cols, bool full) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < r; ++col) {
    const std::size_t w = col >> 6;
    const Word bit = Word{1} << (col & 63);
    std::size_t piv = row;
    while (piv < r && !(m[piv * stride + w] & bit)) ++piv;
    if (piv == r) continue;
    if (piv != row)
      for (std::size_t x = 0; x < stride; ++x) std::swap(m[piv * stride + x], m[row * stride + x]);
    const Word* prow = m + row * stride;
    std::size_t start = full ? 0 : row + 1;
    for (std::size_t i = start; i < r; ++i) {
      if (i == row) continue;
      Word* ri = m + i * stride;
      if (ri[w] & bit) xor_into(ri + w, prow + w, stride - w);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace chartab::ffmat::gf2
