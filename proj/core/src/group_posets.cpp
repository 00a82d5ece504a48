#include "grptopo/group_posets.hpp"

#include <algorithm>

#include "grptopo/errors.hpp"

namespace grptopo {

namespace {

std::string coset_label(const SubgroupLattice& lat, const Coset& c) {
  return lat.group().perm(c.rep).cycle_string() + "*H" + std::to_string(c.subgroup);
}

FinitePoset poset_from_cosets(const SubgroupLattice& lat, const std::vector<const Coset*>& cs,
                              Provenance prov) {
  const int n = int(cs.size());
  std::vector<Bitset> above((size_t)n, Bitset(n));
  std::vector<std::string> labels((size_t)n);
  for (int i = 0; i < n; ++i) {
    labels[size_t(i)] = coset_label(lat, *cs[size_t(i)]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // xH < yK iff H < K and the member sets nest.
      if (cs[size_t(i)]->members.size() < cs[size_t(j)]->members.size() &&
          cs[size_t(i)]->mask.subset_of(cs[size_t(j)]->mask))
        above[size_t(i)].set(j);
    }
  }
  return FinitePoset::from_above_masks(std::move(above), std::move(labels), prov);
}

}  // namespace

FinitePoset coset_poset(const SubgroupLattice& lat) {
  const auto& cosets = lat.proper_cosets();
  std::vector<const Coset*> cs;
  cs.reserve(cosets.size());
  for (const Coset& c : cosets) cs.push_back(&c);
  return poset_from_cosets(lat, cs, Provenance::CosetPoset);
}

FinitePoset subgroup_poset(const SubgroupLattice& lat) {
  const int m = lat.count();
  std::vector<int> keep;
  for (int i = 1; i < m - 1; ++i) keep.push_back(i);
  const int n = int(keep.size());
  std::vector<Bitset> above((size_t)n, Bitset(n));
  std::vector<std::string> labels((size_t)n);
  for (int a = 0; a < n; ++a) {
    labels[size_t(a)] =
        "H" + std::to_string(keep[size_t(a)]) + "(" + std::to_string(lat.sub(keep[size_t(a)]).order) + ")";
    for (int b = 0; b < n; ++b)
      if (a != b && lat.sub(keep[size_t(a)]).order < lat.sub(keep[size_t(b)]).order &&
          lat.leq(keep[size_t(a)], keep[size_t(b)]))
        above[size_t(a)].set(b);
  }
  return FinitePoset::from_above_masks(std::move(above), std::move(labels),
                                       Provenance::SubgroupPoset);
}

FinitePoset punctured_coset_poset(const SubgroupLattice& lat, int element) {
  if (element < 0 || element >= int(lat.group().order()))
    throw DomainError("puncture element out of range");
  const auto& cosets = lat.proper_cosets();
  std::vector<const Coset*> cs;
  for (const Coset& c : cosets) {
    if (c.subgroup == 0 && c.rep == element) continue;  // the singleton {g}
    cs.push_back(&c);
  }
  return poset_from_cosets(lat, cs, Provenance::Punctured);
}

FinitePoset relative_coset_poset(const SubgroupLattice& lat, int normal_id) {
  if (!lat.is_normal(normal_id) || normal_id == lat.full_id() || normal_id == lat.trivial_id())
    throw DomainError("relative coset poset needs a proper nontrivial normal subgroup");
  const Group& g = lat.group();
  const Subgroup& n = lat.sub(normal_id);
  const auto& cosets = lat.proper_cosets();
  std::vector<const Coset*> cs;
  for (const Coset& c : cosets) {
    // HN = G iff |H||N| / |H ∩ N| = |G|.
    int meet = lat.meet(c.subgroup, normal_id);
    if (lat.sub(c.subgroup).order * n.order / lat.sub(meet).order == g.order())
      cs.push_back(&c);
  }
  return poset_from_cosets(lat, cs, Provenance::Relative);
}

std::vector<int> maximal_intersection_ids(const SubgroupLattice& lat) {
  Bitset in(lat.count());
  std::vector<int> work;
  for (int m : lat.maximal_ids()) {
    if (!in.test(m)) {
      in.set(m);
      work.push_back(m);
    }
  }
  for (size_t k = 0; k < work.size(); ++k) {
    for (size_t j = 0; j < work.size(); ++j) {
      int meet = lat.meet(work[k], work[j]);
      if (!in.test(meet)) {
        in.set(meet);
        work.push_back(meet);
      }
    }
  }
  std::vector<int> out = in.to_indices();
  out.erase(std::remove(out.begin(), out.end(), lat.full_id()), out.end());
  return out;
}

FinitePoset reduce_to_maximal_intersections(const SubgroupLattice& lat, const FinitePoset& p) {
  auto ids = maximal_intersection_ids(lat);
  Bitset keep_sub(lat.count());
  for (int i : ids) keep_sub.set(i);

  std::vector<int> keep;
  if (p.provenance() == Provenance::CosetPoset) {
    const auto& cosets = lat.proper_cosets();
    if (p.size() != int(cosets.size()))
      throw DomainError("poset does not match this lattice's coset poset");
    for (int i = 0; i < p.size(); ++i)
      if (keep_sub.test(cosets[size_t(i)].subgroup)) keep.push_back(i);
  } else if (p.provenance() == Provenance::SubgroupPoset) {
    if (p.size() != lat.count() - 2)
      throw DomainError("poset does not match this lattice's subgroup poset");
    for (int i = 0; i < p.size(); ++i)
      if (keep_sub.test(i + 1)) keep.push_back(i);
  } else {
    throw DomainError("reduction needs coset or subgroup provenance");
  }
  return p.restricted_to(keep, Provenance::Reduced);
}

}  // namespace grptopo
