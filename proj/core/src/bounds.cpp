#include "grptopo/bounds.hpp"

#include "grptopo/group_posets.hpp"

namespace grptopo {

namespace {

bool prime_power(long long n, long long* p_out) {
  if (n < 2) return false;
  long long p = 0;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return false;
  *p_out = p;
  return true;
}

}  // namespace

std::vector<BoundInstance> mv_rank_bounds(const SubgroupLattice& lat) {
  std::vector<BoundInstance> out;
  const Group& g = lat.group();
  bool g_cyclic = lat.is_cyclic(lat.full_id());

  if (!g_cyclic) {
    for (int m : lat.maximal_ids()) {
      long long p = 0;
      if (!lat.is_cyclic(m) || !prime_power(lat.sub(m).order, &p)) continue;
      BoundInstance b;
      b.kind = BoundInstance::Kind::CyclicMaximal;
      b.bound = (p - 1) * (g.order() / lat.sub(m).order);
      b.detail = "maximal cyclic subgroup H" + std::to_string(m) + " of order " +
                 std::to_string(lat.sub(m).order);
      out.push_back(std::move(b));
    }
  }

  {
    int n = subgroup_poset(lat).component_count();
    BoundInstance b;
    b.kind = BoundInstance::Kind::SubgroupComponents;
    b.bound = n > 0 ? n - 1 : 0;
    b.detail = "subgroup poset has " + std::to_string(n) + " component(s)";
    out.push_back(std::move(b));
  }
  return out;
}

BoundsReport check_mv_bounds(const SubgroupLattice& lat,
                             const HomologySummary& coset_homology) {
  BoundsReport r;
  r.instances = mv_rank_bounds(lat);
  r.h1_rank = coset_homology.betti_at(1);
  for (const auto& b : r.instances)
    if (r.h1_rank < b.bound) r.all_satisfied = false;
  return r;
}

std::vector<InequalityRow> hom_inequality_report(const SubgroupLattice& lat,
                                                 const HomologySummary& subgroup_homology,
                                                 const HomologySummary& coset_homology,
                                                 const HomologySummary& punctured_homology,
                                                 int n_max) {
  (void)lat;
  std::vector<InequalityRow> rows;
  for (int n = 0; n <= n_max; ++n) {
    InequalityRow row;
    row.n = n;
    row.rank_subgroup = subgroup_homology.betti_at(n);
    row.rank_coset_next = coset_homology.betti_at(n + 1);
    row.holds = row.rank_subgroup <= row.rank_coset_next;
    row.surjection_applies = punctured_homology.betti_at(n) == 0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace grptopo
