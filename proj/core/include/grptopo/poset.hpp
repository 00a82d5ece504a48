#pragma once

#include <string>
#include <vector>

#include "grptopo/bitset.hpp"

namespace grptopo {

enum class Provenance {
  Generic,
  CosetPoset,
  SubgroupPoset,
  Relative,
  Invariant,
  Punctured,
  Reduced,
};

std::string provenance_name(Provenance p);

/// A finite strict poset. The full strict relation is stored as up-set masks;
/// constructors transitively close their input and validate irreflexivity and
/// antisymmetry.
class FinitePoset {
 public:
  FinitePoset() = default;

  static FinitePoset from_less_pairs(int n, const std::vector<std::pair<int, int>>& less,
                                     std::vector<std::string> labels = {},
                                     Provenance prov = Provenance::Generic);

  /// `above[i]` must already be the strict transitive up-set of i.
  static FinitePoset from_above_masks(std::vector<Bitset> above,
                                      std::vector<std::string> labels = {},
                                      Provenance prov = Provenance::Generic);

  int size() const { return int(above_.size()); }
  Provenance provenance() const { return prov_; }
  const std::string& label(int i) const { return labels_[size_t(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool less(int i, int j) const { return above_[size_t(i)].test(j); }
  const Bitset& above(int i) const { return above_[size_t(i)]; }
  const Bitset& below(int i) const { return below_[size_t(i)]; }

  std::vector<int> minimal_elements() const;
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Induced subposet; keeps label text, relabels indices.
  FinitePoset restricted_to(const std::vector<int>& keep, Provenance prov) const;

  /// Comparability-graph components; entry i is the component id of i.
  std::vector<int> components() const;
  int component_count() const;

  /// Cover-list text format: "poset <n>" then one "i < j" line per cover.
  std::string serialize() const;
  static FinitePoset parse(const std::string& text);

  bool is_isomorphic_by(const FinitePoset& other, const std::vector<int>& map) const;

 private:
  std::vector<Bitset> above_, below_;
  std::vector<std::string> labels_;
  Provenance prov_ = Provenance::Generic;
};

/// Removes elements whose strict up-set has a unique minimal element (the
/// up-set is then a cone), iterating to a fixpoint. Homotopy type, hence
/// homology, is preserved. Removal order: ascending (down-set size, index).
FinitePoset quillen_reduce(const FinitePoset& p);

}  // namespace grptopo
