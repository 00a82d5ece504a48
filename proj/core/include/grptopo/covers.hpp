#pragma once

#include <vector>

#include "grptopo/action.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// Verdict for a candidate n-regular 2-transitive cover.
struct CoverCheck {
  bool covers = false;
  std::vector<int> uncovered;  // element witnesses when covering fails

  struct MemberVerdict {
    int subgroup_id = -1;
    bool two_transitive = false;
    bool regular = false;  // some order-n element lies outside the subgroup
  };
  std::vector<MemberVerdict> members;

  bool pass() const {
    if (!covers) return false;
    for (const auto& m : members)
      if (!m.two_transitive || !m.regular) return false;
    return true;
  }
};

/// Checks that the subgroups cover G elementwise, that each coset action is
/// 2-transitive, and that no member contains every order-n element.
CoverCheck cover_check(const SubgroupLattice& lat, const std::vector<int>& subgroup_ids,
                       long long n);

struct EulerPslValue {
  long long p = 0;
  long long group_order = 0;
  long long chi = 0;        // Euler characteristic of the coset complex
  long long chi_reduced = 0;
  bool degenerate = false;  // p = 3: the group is solvable, value recorded only
};

/// Closed form o(G)*(p(p-1)(p+1)/12 - p - 4) + 1 for the Euler characteristic
/// of the PSL2(F_p) coset complex; requires p = ±3 (mod 8) and p = ±2 (mod 5).
EulerPslValue euler_psl_formula(long long p);

struct ComplementedCheck {
  bool complemented = true;
  int witness_normal_id = -1;  // an uncomplemented proper normal subgroup
};

ComplementedCheck is_complemented(const SubgroupLattice& lat);

}  // namespace grptopo
