#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chartab/io/matrix_text.hpp"
#include "chartab/meataxe/module.hpp"

namespace chartab::io {

struct GModuleManifest {
  int p = 2;
  std::size_t dim = 0;
  std::size_t ngens = 0;
  friend bool operator==(const GModuleManifest&, const GModuleManifest&) = default;
};

inline std::string write_gmodule_manifest(const GModuleManifest& m) {
  return "gmodule " + std::to_string(m.p) + " " + std::to_string(m.dim) + " " + std::to_string(m.ngens) + "\n";
}

inline GModuleManifest read_gmodule_manifest(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0].rfind("gmodule ", 0) != 0) fail(ErrorKind::parse, at_line(1, "expected 'gmodule <p> <dim> <ngens>'"));
  auto v = detail::header_numbers(lines[0].substr(8), 3, 1);
  if (v[0] < 2 || v[0] > 10 || !is_prime(v[0])) fail(ErrorKind::parse, at_line(1, "field size is not a prime below 10"));
  if (v[1] < 0 || v[2] < 0) fail(ErrorKind::parse, at_line(1, "negative count"));
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (!lines[i].empty()) fail(ErrorKind::parse, at_line(static_cast<int>(i) + 1, "content after the manifest line"));
  return {static_cast<int>(v[0]), static_cast<std::size_t>(v[1]), static_cast<std::size_t>(v[2])};
}

inline std::string generator_file(std::size_t i) { return "g" + std::to_string(i + 1) + ".txt"; }

// A module directory holds "manifest" and the generators g1.txt, g2.txt, ...
inline void save_gmodule(const meataxe::GModule& m, const std::string& dir) {
  std::filesystem::create_directories(dir);
  write_file(dir + "/manifest", write_gmodule_manifest({m.field().p(), m.dim(), m.generators().size()}));
  for (std::size_t i = 0; i < m.generators().size(); ++i) save_matrix(m.generators()[i], dir + "/" + generator_file(i));
}

inline meataxe::GModule load_gmodule(const std::string& dir) {
  auto man = read_gmodule_manifest(read_file(dir + "/manifest"));
  std::vector<ffmat::FFMatrix> gens;
  for (std::size_t i = 0; i < man.ngens; ++i) {
    auto g = load_matrix(dir + "/" + generator_file(i));
    if (g.field().p() != man.p) fail(ErrorKind::validation, generator_file(i) + " is not over GF(" + std::to_string(man.p) + ")");
    gens.push_back(std::move(g));
  }
  return meataxe::GModule(ffmat::field(man.p), man.dim, std::move(gens));
}

}  // namespace chartab::io
