#pragma once

#include <vector>

// Generated by tools/sn_tables_gen.cpp (Murnaghan-Nakayama). Rows are indexed by the partition
// labelling the character, columns by the cycle type, both in the partition order listed.

namespace chartab::table {

struct SymmetricTable {
  int n;
  std::vector<std::vector<int>> partitions;
  std::vector<std::vector<int>> values;
};

inline const std::vector<SymmetricTable>& symmetric_tables() {
  static const std::vector<SymmetricTable> t{
    {2,
     {{1, 1}, {2}},
     {{1, -1},
      {1, 1}}},
    {3,
     {{1, 1, 1}, {2, 1}, {3}},
     {{1, -1, 1},
      {2, 0, -1},
      {1, 1, 1}}},
    {4,
     {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}},
     {{1, -1, 1, 1, -1},
      {3, -1, -1, 0, 1},
      {2, 0, 2, -1, 0},
      {3, 1, -1, 0, -1},
      {1, 1, 1, 1, 1}}},
    {5,
     {{1, 1, 1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1}, {3, 1, 1}, {3, 2}, {4, 1}, {5}},
     {{1, -1, 1, 1, -1, -1, 1},
      {4, -2, 0, 1, 1, 0, -1},
      {5, -1, 1, -1, -1, 1, 0},
      {6, 0, -2, 0, 0, 0, 1},
      {5, 1, 1, -1, 1, -1, 0},
      {4, 2, 0, 1, -1, 0, -1},
      {1, 1, 1, 1, 1, 1, 1}}},
  };
  return t;
}

}  // namespace chartab::table
