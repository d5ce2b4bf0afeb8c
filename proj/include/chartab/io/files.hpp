#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "chartab/error.hpp"

namespace chartab::io {

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::not_found, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::not_found, "cannot write " + path);
  f << content;
  if (!f) fail(ErrorKind::not_found, "write to " + path + " failed");
}

inline std::string at_line(int line, const std::string& what) { return "line " + std::to_string(line) + ": " + what; }

}  // namespace chartab::io
