#pragma once

#include <map>
#include <vector>

#include "grptopo/simplicial.hpp"
#include "grptopo/smith.hpp"
#include "grptopo/sparse_matrix.hpp"

namespace grptopo {

/// Integer boundary matrices with the alternating-sign convention over sorted
/// vertex order. boundary[0] is the 1 x f_0 augmentation used for reduced
/// homology; boundary[k] maps k-chains to (k-1)-chains.
struct ChainComplex {
  std::vector<SparseIntMatrix> boundary;
  std::vector<long long> face_counts;
  int truncation_dim = -1;
};

/// Builds boundary matrices and verifies d∘d = 0.
ChainComplex chain_complex(const SimplicialComplex& k);

struct HomologySummary {
  /// Reduced Betti ranks by dimension; dimension -1 carries the empty
  /// complex's single reduced class.
  std::map<int, long long> betti;
  std::map<int, std::vector<long long>> torsion;  // nontrivial divisors per dim
  long long chi = 0;
  long long chi_reduced = -1;
  /// Homology is complete for dimensions <= reliable_dim (truncated
  /// enumerations cannot see higher boundaries).
  int reliable_dim = -1;
  bool truncated = false;
  bool used_bignum = false;

  long long betti_at(int d) const {
    auto it = betti.find(d);
    return it == betti.end() ? 0 : it->second;
  }
  std::vector<long long> torsion_at(int d) const {
    auto it = torsion.find(d);
    return it == torsion.end() ? std::vector<long long>{} : it->second;
  }
  bool torsion_free() const {
    for (const auto& [d, t] : torsion)
      if (!t.empty()) return false;
    return true;
  }
};

/// Reduced integral homology from Smith normal forms of consecutive
/// boundaries.
HomologySummary reduced_homology(const SimplicialComplex& k);

/// (chi, chi_reduced) by alternating face counts. Exact for full complexes;
/// throws on truncated input.
std::pair<long long, long long> euler_characteristics(const SimplicialComplex& k);

}  // namespace grptopo
