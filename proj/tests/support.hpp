#pragma once

#include <string>

#include "chartab/error.hpp"

namespace testsupport {

inline chartab::ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const chartab::Error& e) {
    return e.kind();
  }
  return static_cast<chartab::ErrorKind>(-1);
}

inline std::string data_path(const std::string& name) { return std::string(CHARTAB_DATA_DIR) + "/" + name; }

}  // namespace testsupport
