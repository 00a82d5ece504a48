#include "grptopo/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "grptopo/errors.hpp"

namespace grptopo {

void SparseIntMatrix::canonicalize() {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::vector<Triplet> out;
  out.reserve(entries.size());
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw DomainError("triplet index out of range");
    if (!out.empty() && out.back().row == t.row && out.back().col == t.col)
      out.back().val += t.val;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Triplet& t) { return t.val == 0; }),
            out.end());
  entries = std::move(out);
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix t;
  t.rows = cols;
  t.cols = rows;
  t.entries.reserve(entries.size());
  for (const Triplet& e : entries) t.entries.push_back({e.col, e.row, e.val});
  t.canonicalize();
  return t;
}

std::string SparseIntMatrix::serialize() const {
  std::ostringstream os;
  os << rows << ' ' << cols << ' ' << entries.size() << "\n";
  for (const Triplet& t : entries) os << t.row << ' ' << t.col << ' ' << t.val << "\n";
  return os.str();
}

SparseIntMatrix SparseIntMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  SparseIntMatrix m;
  long long nnz = -1;
  if (!(in >> m.rows >> m.cols >> nnz) || m.rows < 0 || m.cols < 0 || nnz < 0)
    throw ParseError("matrix text must start with 'rows cols nnz'");
  Triplet t;
  while (in >> t.row >> t.col >> t.val) m.entries.push_back(t);
  if ((long long)m.entries.size() != nnz) throw ParseError("matrix nnz mismatch");
  m.canonicalize();
  return m;
}

}  // namespace grptopo
