#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "chartab/ffmat.hpp"
#include "chartab/io/files.hpp"
#include "chartab/perm.hpp"

namespace chartab::io {

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    out.push_back(l);
  }
  return out;
}

inline std::vector<std::int64_t> header_numbers(const std::string& line, std::size_t want, int lineno) {
  std::istringstream in(line);
  std::vector<std::int64_t> out;
  for (std::string t; in >> t;) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) fail(ErrorKind::parse, at_line(lineno, "expected an integer, got '" + t + "'"));
    out.push_back(v);
  }
  if (out.size() != want) fail(ErrorKind::parse, at_line(lineno, "expected " + std::to_string(want) + " header fields"));
  return out;
}

}  // namespace detail

// 1 <p> <rows> <cols>, then one line of <cols> digits per row.
inline std::string write_matrix(const ffmat::FFMatrix& m) {
  const auto& f = m.field();
  if (f.k() != 1) fail(ErrorKind::field, "only prime fields have a text format");
  if (f.p() > 10) fail(ErrorKind::field, "digits cannot encode GF(" + std::to_string(f.p()) + ")");
  std::string out = "1 " + std::to_string(f.p()) + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += static_cast<char>('0' + m.get(i, j));
    out += '\n';
  }
  return out;
}

inline ffmat::FFMatrix read_matrix(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.empty()) fail(ErrorKind::parse, at_line(1, "missing header"));
  auto hd = detail::header_numbers(lines[0], 4, 1);
  if (hd[0] != 1) fail(ErrorKind::parse, at_line(1, "matrix header must start with 1"));
  if (hd[1] < 2 || hd[1] > 10 || !is_prime(hd[1])) fail(ErrorKind::parse, at_line(1, "field size " + std::to_string(hd[1]) + " is not a prime below 10"));
  if (hd[2] < 0 || hd[3] < 0) fail(ErrorKind::parse, at_line(1, "negative dimension"));
  const int p = static_cast<int>(hd[1]);
  const auto r = static_cast<std::size_t>(hd[2]), c = static_cast<std::size_t>(hd[3]);
  if (lines.size() < r + 1) fail(ErrorKind::parse, at_line(static_cast<int>(lines.size()) + 1, "missing row"));
  for (std::size_t i = r + 1; i < lines.size(); ++i)
    if (!lines[i].empty()) fail(ErrorKind::parse, at_line(static_cast<int>(i) + 1, "content after the last row"));
  ffmat::FFMatrix m(ffmat::field(p), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const std::string& row = lines[i + 1];
    const int lineno = static_cast<int>(i) + 2;
    if (row.size() != c) fail(ErrorKind::parse, at_line(lineno, "row has " + std::to_string(row.size()) + " digits, expected " + std::to_string(c)));
    for (std::size_t j = 0; j < c; ++j) {
      int d = row[j] - '0';
      if (d < 0 || d >= p) fail(ErrorKind::parse, at_line(lineno, "digit '" + std::string(1, row[j]) + "' out of range for GF(" + std::to_string(p) + ")"));
      m.set(i, j, static_cast<ffmat::Elt>(d));
    }
  }
  return m;
}

inline ffmat::FFMatrix load_matrix(const std::string& path) {
  try {
    return read_matrix(read_file(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::parse) throw;
    fail(ErrorKind::parse, path + ": " + e.what());
  }
}
inline void save_matrix(const ffmat::FFMatrix& m, const std::string& path) { write_file(path, write_matrix(m)); }

// 12 <degree>, then the 1-based images on one line.
inline std::string write_permutation(const Permutation& g) {
  std::string out = "12 " + std::to_string(g.degree()) + "\n";
  for (std::size_t i = 0; i < g.degree(); ++i) out += (i ? " " : "") + std::to_string(g(i) + 1);
  return out + "\n";
}

inline Permutation read_permutation(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.empty()) fail(ErrorKind::parse, at_line(1, "missing header"));
  auto hd = detail::header_numbers(lines[0], 2, 1);
  if (hd[0] != 12) fail(ErrorKind::parse, at_line(1, "permutation header must start with 12"));
  if (hd[1] < 0) fail(ErrorKind::parse, at_line(1, "negative degree"));
  const auto n = static_cast<std::size_t>(hd[1]);
  auto imgs = detail::header_numbers(lines.size() > 1 ? lines[1] : "", n, 2);
  for (std::size_t i = 2; i < lines.size(); ++i)
    if (!lines[i].empty()) fail(ErrorKind::parse, at_line(static_cast<int>(i) + 1, "content after the image line"));
  std::vector<std::size_t> one_based;
  std::vector<bool> seen(n, false);
  for (auto v : imgs) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v - 1]) fail(ErrorKind::parse, at_line(2, "images are not a permutation of 1.." + std::to_string(n)));
    seen[v - 1] = true;
    one_based.push_back(static_cast<std::size_t>(v));
  }
  return Permutation::from_images(one_based);
}

inline Permutation load_permutation(const std::string& path) {
  try {
    return read_permutation(read_file(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::parse) throw;
    fail(ErrorKind::parse, path + ": " + e.what());
  }
}
inline void save_permutation(const Permutation& g, const std::string& path) { write_file(path, write_permutation(g)); }

// First header field: 1 for a matrix, 12 for a permutation.
inline int file_kind(const std::string& text) {
  std::istringstream in(text);
  int k = 0;
  if (!(in >> k) || (k != 1 && k != 12)) fail(ErrorKind::parse, at_line(1, "unknown file type"));
  return k;
}

}  // namespace chartab::io
