#pragma once

#include <string>
#include <vector>

namespace grptopo {

struct Triplet {
  int row = 0;
  int col = 0;
  long long val = 0;
};

/// Integer sparse matrix in triplet form; canonical order is (col, row) with
/// no duplicates or zeros.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Triplet> entries;

  long long nnz() const { return (long long)entries.size(); }
  void canonicalize();

  SparseIntMatrix transposed() const;

  /// Interchange format: "rows cols nnz" header then "i j v" lines (0-based).
  std::string serialize() const;
  static SparseIntMatrix parse(const std::string& text);
};

}  // namespace grptopo
