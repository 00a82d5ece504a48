#pragma once

#include <vector>

#include "grptopo/group.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// A finite group action: table[e][x] is the image of point x under the e-th
/// element of the acting group.
struct PermAction {
  Group acting;
  int points = 0;
  std::vector<std::vector<int>> table;
};

/// Action of G on the left cosets of H (a proper subgroup) by left
/// multiplication; points are ordered by coset representative.
PermAction coset_action(const SubgroupLattice& lat, int subgroup_id);

/// Single orbit on ordered distinct pairs.
bool is_two_transitive(const PermAction& action);

/// The acting group realized as permutations of the point set (one element per
/// distinct induced permutation; faithful actions keep the order).
Group action_image(const PermAction& action);

struct GeneratingPairClasses {
  long long pair_count = 0;   // generating pairs with the requested orders
  long long class_count = 0;  // orbits of the automorphism action
  std::vector<std::pair<int, int>> representatives;  // lex-min per orbit
};

/// Orbits of Aut(G) acting diagonally on {(x,y) : o(x)=a, o(y)=b, <x,y>=G}.
/// `aut` must act on the |G| element indices by automorphisms (verified on its
/// generators).
GeneratingPairClasses generating_pair_classes(const Group& g, const PermAction& aut,
                                              long long a, long long b);

/// True when H and K have no isomorphic quotients besides the trivial group.
bool is_coprime(const Group& h, const Group& k, long long order_cap = kDefaultOrderCap);

/// Generator-image backtracking with order-profile pruning.
bool are_isomorphic(const Group& a, const Group& b);

}  // namespace grptopo
