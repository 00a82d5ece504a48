#pragma once

#include "grptopo/poset.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// All left cosets of proper subgroups under inclusion. Element i corresponds
/// to lat.proper_cosets()[i]; in particular the first |G| elements are the
/// singleton cosets {g} in element order.
FinitePoset coset_poset(const SubgroupLattice& lat);

/// Proper nontrivial subgroups under inclusion; element i corresponds to
/// lattice id i+1 (the trivial subgroup and G are dropped from the ends).
FinitePoset subgroup_poset(const SubgroupLattice& lat);

/// Coset poset with the singleton {g} removed.
FinitePoset punctured_coset_poset(const SubgroupLattice& lat, int element);

/// Cosets xH with HN = G, for N a proper nontrivial normal subgroup.
FinitePoset relative_coset_poset(const SubgroupLattice& lat, int normal_id);

/// Keeps cosets xH (or subgroups H) whose H lies in the intersection closure
/// of the maximal subgroups. The poset must be the unfiltered coset or
/// subgroup poset of this lattice.
FinitePoset reduce_to_maximal_intersections(const SubgroupLattice& lat, const FinitePoset& p);

/// Subgroup ids in the intersection closure of the maximal subgroups
/// (excluding G itself).
std::vector<int> maximal_intersection_ids(const SubgroupLattice& lat);

}  // namespace grptopo
