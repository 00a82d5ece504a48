#pragma once

#include <string>
#include <vector>

#include "grptopo/homology.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// A Mayer-Vietoris lower bound on rank H1 of the coset complex.
struct BoundInstance {
  enum class Kind { CyclicMaximal, SubgroupComponents };
  Kind kind = Kind::CyclicMaximal;
  long long bound = 0;
  std::string detail;
};

/// Instances from the two bound sources: each maximal cyclic prime-power
/// subgroup M gives (p-1)(G:M) (non-cyclic G only); n components of the
/// subgroup poset give n-1.
std::vector<BoundInstance> mv_rank_bounds(const SubgroupLattice& lat);

struct BoundsReport {
  std::vector<BoundInstance> instances;
  long long h1_rank = 0;
  bool all_satisfied = true;
};

BoundsReport check_mv_bounds(const SubgroupLattice& lat, const HomologySummary& coset_homology);

/// One row of the rank comparison rank H~n(L(G)) <= rank H~(n+1)(C(G)).
struct InequalityRow {
  int n = 0;
  long long rank_subgroup = 0;
  long long rank_coset_next = 0;
  bool holds = false;
  /// The puncture hypothesis H~n(C(G) - {g}) = 0, which upgrades the row to a
  /// genuine surjection.
  bool surjection_applies = false;
};

std::vector<InequalityRow> hom_inequality_report(const SubgroupLattice& lat,
                                                 const HomologySummary& subgroup_homology,
                                                 const HomologySummary& coset_homology,
                                                 const HomologySummary& punctured_homology,
                                                 int n_max);

}  // namespace grptopo
