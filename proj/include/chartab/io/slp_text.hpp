#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chartab/error.hpp"
#include "chartab/io/files.hpp"
#include "chartab/slp/program.hpp"

namespace chartab::io {

// inputs <k>
// line <i1> <e1> [<i2> <e2> ...]
// outputs <i1> <e1> [, <i2> <e2> ...] ; ...
inline std::string write_slp(const slp::Slp& s) {
  std::ostringstream out;
  out << "inputs " << s.inputs() << "\n";
  for (const auto& l : s.lines()) {
    out << "line";
    for (const auto& f : l) out << " " << f.slot << " " << f.exp;
    out << "\n";
  }
  out << "outputs";
  for (std::size_t i = 0; i < s.outputs().size(); ++i) {
    if (i) out << " ;";
    for (std::size_t j = 0; j < s.outputs()[i].size(); ++j) {
      if (j) out << " ,";
      out << " " << s.outputs()[i][j].slot << " " << s.outputs()[i][j].exp;
    }
  }
  out << "\n";
  return out.str();
}

namespace detail {

inline long parse_long(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    fail(ErrorKind::parse, "line " + std::to_string(line) + ": expected an integer, got '" + tok + "'");
  return v;
}

inline slp::Product parse_pairs(const std::vector<std::string>& toks, int line) {
  if (toks.empty() || toks.size() % 2)
    fail(ErrorKind::parse, "line " + std::to_string(line) + ": expected slot/exponent pairs");
  slp::Product p;
  for (std::size_t i = 0; i < toks.size(); i += 2)
    p.push_back({static_cast<int>(parse_long(toks[i], line)), parse_long(toks[i + 1], line)});
  return p;
}

}  // namespace detail

inline slp::Slp read_slp(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int inputs = -1;
  std::vector<slp::Product> lines, outputs;
  bool have_outputs = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string spaced;
    for (char c : raw) {
      if (c == ',' || c == ';') spaced += std::string(" ") + c + " ";
      else spaced += c;
    }
    std::istringstream ls(spaced);
    std::string key;
    if (!(ls >> key)) continue;
    if (have_outputs) fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": content after outputs");
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (key == "inputs") {
      if (inputs >= 0 || toks.size() != 1) fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": malformed inputs line");
      inputs = static_cast<int>(detail::parse_long(toks[0], lineno));
    } else if (key == "line") {
      if (inputs < 0) fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": line before inputs");
      lines.push_back(toks.empty() ? slp::Product{} : detail::parse_pairs(toks, lineno));
    } else if (key == "outputs") {
      if (inputs < 0) fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": outputs before inputs");
      have_outputs = true;
      std::vector<std::string> cur;
      slp::Product prod;
      auto flush_pairs = [&] {
        slp::Product p = detail::parse_pairs(cur, lineno);
        prod.insert(prod.end(), p.begin(), p.end());
        cur.clear();
      };
      for (const auto& t : toks) {
        if (t == ",") {
          flush_pairs();
        } else if (t == ";") {
          flush_pairs();
          outputs.push_back(std::move(prod));
          prod.clear();
        } else {
          cur.push_back(t);
        }
      }
      flush_pairs();
      outputs.push_back(std::move(prod));
    } else {
      fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": unknown keyword '" + key + "'");
    }
  }
  if (inputs < 0) fail(ErrorKind::parse, "missing inputs line");
  if (!have_outputs) fail(ErrorKind::parse, "missing outputs line");
  return slp::Slp(inputs, std::move(lines), std::move(outputs));
}

inline slp::Slp load_slp(const std::string& path) { return read_slp(read_file(path)); }
inline void save_slp(const slp::Slp& s, const std::string& path) { write_file(path, write_slp(s)); }

}  // namespace chartab::io
