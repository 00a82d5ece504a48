#pragma once

#include <string>
#include <vector>

#include "grptopo/poset.hpp"

namespace grptopo {

/// Guard for chain / face enumeration.
inline constexpr long long kDefaultFaceCap = 5000000;

/// Faces grouped by dimension; every face is a sorted vertex list and each
/// dimension level is sorted lexicographically. A non-negative truncation_dim
/// means faces above that dimension were deliberately not enumerated.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::string> vertex_labels;            // optional
  std::vector<std::vector<std::vector<int>>> faces;  // faces[d]
  int truncation_dim = -1;

  int dim() const { return int(faces.size()) - 1; }
  long long face_count(int d) const {
    return (d >= 0 && d < int(faces.size())) ? (long long)faces[size_t(d)].size() : 0;
  }
  long long total_faces() const;
  bool truncated() const { return truncation_dim >= 0; }

  /// Downward closure + sortedness + no duplicates (ignoring levels above the
  /// truncation dimension, where closure cannot be checked).
  void validate() const;

  /// Face lists per dimension: "complex <nverts>" then "dim k" headers.
  std::string serialize() const;
  static SimplicialComplex parse(const std::string& text);
};

/// All chains of P. Throws CapExceeded past max_faces; max_dim < 0 means no
/// dimension cap.
SimplicialComplex order_complex(const FinitePoset& p, int max_dim = -1,
                                long long max_faces = kDefaultFaceCap);

}  // namespace grptopo
