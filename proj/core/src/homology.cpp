#include "grptopo/homology.hpp"

#include <algorithm>
#include <map>

#include "grptopo/errors.hpp"

namespace grptopo {

ChainComplex chain_complex(const SimplicialComplex& k) {
  ChainComplex cc;
  cc.truncation_dim = k.truncation_dim;
  const int dims = int(k.faces.size());
  cc.face_counts.resize(size_t(dims));
  for (int d = 0; d < dims; ++d) cc.face_counts[size_t(d)] = k.face_count(d);

  cc.boundary.resize(size_t(dims));
  if (dims == 0) return cc;

  // Augmentation row.
  cc.boundary[0].rows = 1;
  cc.boundary[0].cols = int(k.face_count(0));
  for (int j = 0; j < int(k.face_count(0)); ++j)
    cc.boundary[0].entries.push_back({0, j, 1});

  for (int d = 1; d < dims; ++d) {
    SparseIntMatrix& m = cc.boundary[size_t(d)];
    m.rows = int(k.face_count(d - 1));
    m.cols = int(k.face_count(d));
    const auto& level = k.faces[size_t(d)];
    const auto& facets = k.faces[size_t(d - 1)];
    std::vector<int> facet((size_t)d);
    for (int j = 0; j < int(level.size()); ++j) {
      const auto& f = level[size_t(j)];
      long long sign = 1;
      for (size_t drop = 0; drop < f.size(); ++drop) {
        facet.assign(f.begin(), f.end());
        facet.erase(facet.begin() + long(drop));
        auto it = std::lower_bound(facets.begin(), facets.end(), facet);
        if (it == facets.end() || *it != facet)
          throw DomainError("complex is not downward closed");
        m.entries.push_back({int(it - facets.begin()), j, sign});
        sign = -sign;
      }
    }
    m.canonicalize();
  }

  // d∘d = 0, including the augmentation against dimension 1.
  for (int d = 1; d < dims; ++d) {
    const SparseIntMatrix& lower = cc.boundary[size_t(d - 1)];
    std::vector<std::vector<std::pair<int, long long>>> lower_cols(size_t(lower.cols));
    for (const Triplet& t : lower.entries) lower_cols[size_t(t.col)].push_back({t.row, t.val});
    const SparseIntMatrix& upper = cc.boundary[size_t(d)];
    size_t pos = 0;
    while (pos < upper.entries.size()) {
      size_t end = pos;
      int col = upper.entries[pos].col;
      std::map<int, long long> acc;
      while (end < upper.entries.size() && upper.entries[end].col == col) {
        for (auto [r, v] : lower_cols[size_t(upper.entries[end].row)])
          acc[r] += upper.entries[end].val * v;
        ++end;
      }
      for (auto& [r, v] : acc)
        if (v != 0) throw DomainError("boundary composition is nonzero");
      pos = end;
    }
  }
  return cc;
}

HomologySummary reduced_homology(const SimplicialComplex& k) {
  HomologySummary out;
  out.truncated = k.truncated();
  const int dims = int(k.faces.size());

  if (dims == 0) {
    out.betti[-1] = 1;  // empty complex
    out.chi = 0;
    out.chi_reduced = -1;
    out.reliable_dim = 1 << 20;
    return out;
  }

  ChainComplex cc = chain_complex(k);
  std::vector<SNFResult> snf((size_t)dims);
  for (int d = 0; d < dims; ++d) {
    snf[size_t(d)] = smith_normal_form(cc.boundary[size_t(d)]);
    out.used_bignum = out.used_bignum || snf[size_t(d)].used_bignum;
  }

  int top = out.truncated ? std::min(dims - 1, k.truncation_dim) - 1 : dims - 1;
  out.reliable_dim = out.truncated ? top : (1 << 20);

  for (int d = 0; d < dims && d <= top; ++d) {
    long long rank_d = snf[size_t(d)].rank;
    long long rank_up = (d + 1 < dims) ? snf[size_t(d + 1)].rank : 0;
    long long betti = cc.face_counts[size_t(d)] - rank_d - rank_up;
    if (betti < 0) throw DomainError("negative Betti rank (rank bookkeeping bug)");
    if (betti > 0) out.betti[d] = betti;
    if (d + 1 < dims) {
      auto tor = snf[size_t(d + 1)].nontrivial_divisors();
      if (!tor.empty()) out.torsion[d] = std::move(tor);
    }
  }

  if (!out.truncated) {
    long long chi = 0;
    for (int d = 0; d < dims; ++d) chi += (d % 2 ? -1 : 1) * cc.face_counts[size_t(d)];
    out.chi = chi;
    out.chi_reduced = chi - 1;
    long long alt = 0;
    for (const auto& [d, r] : out.betti) alt += (d % 2 || d < 0 ? -1 : 1) * r;
    if (alt != out.chi_reduced)
      throw DomainError("alternating Betti sum disagrees with Euler characteristic");
  }
  return out;
}

std::pair<long long, long long> euler_characteristics(const SimplicialComplex& k) {
  if (k.truncated())
    throw DomainError("Euler characteristic needs the full face enumeration");
  long long chi = 0;
  for (int d = 0; d < int(k.faces.size()); ++d)
    chi += (d % 2 ? -1 : 1) * k.face_count(d);
  return {chi, chi - 1};
}

}  // namespace grptopo
