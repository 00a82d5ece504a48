#include "grptopo/covers.hpp"

#include "grptopo/errors.hpp"

namespace grptopo {

CoverCheck cover_check(const SubgroupLattice& lat, const std::vector<int>& subgroup_ids,
                       long long n) {
  const Group& g = lat.group();
  CoverCheck out;
  Bitset covered(int(g.order()));
  for (int id : subgroup_ids) {
    if (id == lat.full_id()) throw DomainError("cover members must be proper subgroups");
    covered |= lat.sub(id).mask;
  }
  out.covers = covered.count() == g.order();
  if (!out.covers)
    for (int e = 0; e < int(g.order()); ++e)
      if (!covered.test(e)) out.uncovered.push_back(e);

  std::vector<int> order_n;
  for (int e = 0; e < int(g.order()); ++e)
    if (g.element_order(e) == n) order_n.push_back(e);

  for (int id : subgroup_ids) {
    CoverCheck::MemberVerdict v;
    v.subgroup_id = id;
    v.two_transitive = is_two_transitive(coset_action(lat, id));
    v.regular = false;
    for (int e : order_n)
      if (!lat.sub(id).mask.test(e)) {
        v.regular = true;
        break;
      }
    out.members.push_back(v);
  }
  return out;
}

EulerPslValue euler_psl_formula(long long p) {
  long long m8 = p % 8, m5 = p % 5;
  if (!(m8 == 3 || m8 == 5)) throw DomainError("euler formula needs p = ±3 (mod 8)");
  if (!(m5 == 2 || m5 == 3)) throw DomainError("euler formula needs p = ±2 (mod 5)");
  EulerPslValue v;
  v.p = p;
  v.group_order = p * (p - 1) * (p + 1) / 2;
  v.chi = v.group_order * (p * (p - 1) * (p + 1) / 12 - p - 4) + 1;
  v.chi_reduced = v.chi - 1;
  v.degenerate = (p == 3);
  return v;
}

ComplementedCheck is_complemented(const SubgroupLattice& lat) {
  ComplementedCheck out;
  for (int n : lat.normal_ids()) {
    if (n == lat.trivial_id() || n == lat.full_id()) continue;
    if (complements(lat, n).complements.empty()) {
      out.complemented = false;
      out.witness_normal_id = n;
      return out;
    }
  }
  return out;
}

}  // namespace grptopo
