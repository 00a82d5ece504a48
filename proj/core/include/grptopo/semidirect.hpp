#pragma once

#include <optional>

#include "grptopo/group_posets.hpp"
#include "grptopo/poset.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// An internal semidirect decomposition G = H ⋊ K with the first-coordinate
/// map f(hk) = h and the projection pi(hk) = k, both stored per element.
struct SemidirectStructure {
  Group group;
  int normal_id = -1;
  int complement_id = -1;
  std::vector<int> first_coordinate;  // element index into the normal factor
  std::vector<int> projection;        // element index into the complement
};

SemidirectStructure semidirect_structure(const Group& g, int normal_id, int complement_id,
                                         long long order_cap = kDefaultOrderCap);

/// First decomposition with nontrivial factors, in lattice id order.
std::optional<SemidirectStructure> find_semidirect_structure(
    const Group& g, long long order_cap = kDefaultOrderCap);

/// K-invariant subgroups of the normal factor (conjugation-stable under K),
/// proper in H; optionally keeping the trivial subgroup.
std::vector<int> invariant_subgroup_ids(const SubgroupLattice& lat, int h_id, int k_id,
                                        bool include_trivial);

/// H is K-cyclic when some element of H avoids every proper K-invariant
/// subgroup of H.
bool is_k_cyclic(const SubgroupLattice& lat, int h_id, int k_id);

struct SemidirectPosets {
  std::vector<int> invariant_ids;   // lattice ids behind L_K(H), trivial included
  FinitePoset invariant_subgroups;  // L_K(H)
  FinitePoset invariant_cosets;     // C_K(H): cosets of proper K-invariant subgroups
  FinitePoset nonsaturating;        // C0(G)
  std::vector<int> saturating;      // indices into lat.proper_cosets()
};

/// The posets behind the semidirect join decomposition: a coset gT saturates
/// when pi(T) = K and the K-invariant closure of f(T) is all of H.
SemidirectPosets semidirect_posets(const SemidirectStructure& s,
                                   long long order_cap = kDefaultOrderCap);

/// A subgroup realized as a standalone permutation group (same point set).
Group subgroup_as_group(const SubgroupLattice& lat, int id);

}  // namespace grptopo
