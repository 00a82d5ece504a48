#pragma once

#include <optional>
#include <vector>

#include "grptopo/poset.hpp"
#include "grptopo/simplicial.hpp"

namespace grptopo {

/// Element id returned by joins when the atom set generates the whole poset
/// (no upper bound exists).
inline constexpr int kWhole = -1;

/// Atom structure of a poset in which every bounded finite atom set has a
/// join. Produced by atomize(); join queries intersect reflexive up-sets.
class AtomizedView {
 public:
  const FinitePoset& poset() const { return poset_; }
  const std::vector<int>& atoms() const { return atoms_; }

  /// Least element above every atom in the set, or kWhole. Atom ids are
  /// element ids of the underlying poset.
  int join(const std::vector<int>& atom_elements) const;

 private:
  friend struct AtomizeAccess;
  FinitePoset poset_;
  std::vector<int> atoms_;
  std::vector<Bitset> up_closed_;  // reflexive up-sets, all elements
};

struct AtomizeResult {
  std::optional<AtomizedView> view;
  /// On rejection: a bounded atom set (element ids) with no least upper bound.
  std::vector<int> rejection_witness;

  bool atomized() const { return view.has_value(); }
};

/// Checks the bounded-join property by walking the distinct intersections of
/// atom up-sets; each nonempty intersection must have a least element.
AtomizeResult atomize(const FinitePoset& p);

/// True iff every k-subset of atoms has a join (never generates the whole
/// poset). Exhaustive with early exit.
bool no_k_atoms_generate(const AtomizedView& v, int k);

struct MinimalCoverOptions {
  int max_dim = -1;           // <0: spec default (full when |atoms| <= 200, else 4)
  long long max_faces = kDefaultFaceCap;
};

/// Nerve on the atoms: faces are the finite atom sets whose join is not the
/// whole poset. Grown breadth-first by extending faces one atom at a time.
SimplicialComplex minimal_cover(const AtomizedView& v, MinimalCoverOptions opts = {});

}  // namespace grptopo
