#include "grptopo/semidirect.hpp"

#include <algorithm>

#include "grptopo/errors.hpp"

namespace grptopo {

Group subgroup_as_group(const SubgroupLattice& lat, int id) {
  const Group& g = lat.group();
  const Subgroup& s = lat.sub(id);
  std::vector<Permutation> gens;
  for (int w : s.witness) gens.push_back(g.perm(w));
  if (gens.empty()) gens.push_back(Permutation::identity(g.degree()));
  Group out = Group::from_generators(g.degree(), gens,
                                     g.name() + ".H" + std::to_string(id));
  if (out.order() != s.order) throw DomainError("subgroup realization mismatch");
  return out;
}

SemidirectStructure semidirect_structure(const Group& g, int normal_id, int complement_id,
                                         long long order_cap) {
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  if (!lat.is_normal(normal_id)) throw DomainError("semidirect: H must be normal");
  const Subgroup& h = lat.sub(normal_id);
  const Subgroup& k = lat.sub(complement_id);
  if ((h.mask & k.mask).count() != 1 || h.order * k.order != g.order())
    throw DomainError("semidirect: K is not a complement of H");

  SemidirectStructure s;
  s.group = g;
  s.normal_id = normal_id;
  s.complement_id = complement_id;
  const int n = int(g.order());
  s.first_coordinate.assign(size_t(n), -1);
  s.projection.assign(size_t(n), -1);
  for (int e = 0; e < n; ++e) {
    for (int km : k.members) {
      int maybe_h = g.mul(e, g.inv(km));
      if (h.mask.test(maybe_h)) {
        s.first_coordinate[size_t(e)] = maybe_h;
        s.projection[size_t(e)] = km;
        break;
      }
    }
    if (s.projection[size_t(e)] < 0)
      throw DomainError("semidirect: element not covered by HK");
  }
  return s;
}

std::optional<SemidirectStructure> find_semidirect_structure(const Group& g,
                                                             long long order_cap) {
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  for (int n : lat.normal_ids()) {
    if (n == lat.trivial_id() || n == lat.full_id()) continue;
    ComplementSet cs = complements(lat, n);
    if (!cs.complements.empty())
      return semidirect_structure(g, n, cs.complements.front(), order_cap);
  }
  return std::nullopt;
}

std::vector<int> invariant_subgroup_ids(const SubgroupLattice& lat, int h_id, int k_id,
                                        bool include_trivial) {
  const Group& g = lat.group();
  const Subgroup& h = lat.sub(h_id);
  const Subgroup& k = lat.sub(k_id);
  std::vector<int> out;
  for (int i = 0; i < lat.count(); ++i) {
    if (i == h_id) continue;
    const Subgroup& cand = lat.sub(i);
    if (!cand.mask.subset_of(h.mask)) continue;
    if (!include_trivial && cand.order == 1) continue;
    bool invariant = true;
    for (int kw : k.witness) {
      for (int m : cand.members)
        if (!cand.mask.test(g.conj(kw, m))) {
          invariant = false;
          break;
        }
      if (!invariant) break;
    }
    if (invariant) out.push_back(i);
  }
  return out;
}

bool is_k_cyclic(const SubgroupLattice& lat, int h_id, int k_id) {
  auto inv = invariant_subgroup_ids(lat, h_id, k_id, true);
  Bitset covered(int(lat.group().order()));
  for (int i : inv) covered |= lat.sub(i).mask;
  // Some h in H escapes every proper K-invariant subgroup.
  for (int m : lat.sub(h_id).members)
    if (!covered.test(m)) return true;
  return false;
}

namespace {

FinitePoset poset_from_masks(std::vector<Bitset> masks, std::vector<std::string> labels,
                             Provenance prov) {
  const int n = int(masks.size());
  std::vector<Bitset> above((size_t)n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && masks[size_t(i)].count() < masks[size_t(j)].count() &&
          masks[size_t(i)].subset_of(masks[size_t(j)]))
        above[size_t(i)].set(j);
  return FinitePoset::from_above_masks(std::move(above), std::move(labels), prov);
}

}  // namespace

SemidirectPosets semidirect_posets(const SemidirectStructure& s, long long order_cap) {
  const Group& g = s.group;
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  const Subgroup& h = lat.sub(s.normal_id);
  const Subgroup& k = lat.sub(s.complement_id);

  SemidirectPosets out;
  out.invariant_ids = invariant_subgroup_ids(lat, s.normal_id, s.complement_id, true);

  {  // L_K(H) on the invariant subgroups themselves
    std::vector<Bitset> masks;
    std::vector<std::string> labels;
    for (int i : out.invariant_ids) {
      masks.push_back(lat.sub(i).mask);
      labels.push_back("H" + std::to_string(i));
    }
    out.invariant_subgroups =
        poset_from_masks(std::move(masks), std::move(labels), Provenance::Invariant);
  }

  {  // C_K(H): left cosets (within H) of the invariant subgroups
    std::vector<Bitset> masks;
    std::vector<std::string> labels;
    for (int i : out.invariant_ids) {
      const Subgroup& sub = lat.sub(i);
      Bitset covered(int(g.order()));
      for (int x : h.members) {
        if (covered.test(x)) continue;
        Bitset coset(int(g.order()));
        for (int m : sub.members) coset.set(g.mul(x, m));
        covered |= coset;
        labels.push_back(g.perm(x).cycle_string() + "*H" + std::to_string(i));
        masks.push_back(std::move(coset));
      }
    }
    out.invariant_cosets =
        poset_from_masks(std::move(masks), std::move(labels), Provenance::Invariant);
  }

  // Saturation is a property of the underlying subgroup T: pi(T) = K and the
  // K-invariant closure of f(T) is all of H.
  std::vector<char> saturating_sub((size_t)lat.count(), 0);
  for (int t = 0; t < lat.count() - 1; ++t) {
    const Subgroup& sub = lat.sub(t);
    Bitset pi_image(int(g.order()));
    for (int m : sub.members) pi_image.set(s.projection[size_t(m)]);
    if (pi_image.count() != k.order) continue;

    Bitset closure(int(g.order()));
    for (int m : sub.members) closure.set(s.first_coordinate[size_t(m)]);
    // Alternate subgroup closure and K-conjugation until stable.
    while (true) {
      Bitset grown = g.closure(closure.to_indices());
      for (int kw : k.witness)
        for (int m = grown.find_first(); m >= 0; m = grown.find_next(m))
          grown.set(g.conj(kw, m));
      if (grown == closure) break;
      closure = std::move(grown);
    }
    if (closure == h.mask) saturating_sub[size_t(t)] = 1;
  }

  const auto& cosets = lat.proper_cosets();
  std::vector<const Coset*> keep;
  for (int ci = 0; ci < int(cosets.size()); ++ci) {
    if (saturating_sub[size_t(cosets[size_t(ci)].subgroup)]) {
      out.saturating.push_back(ci);
    } else {
      keep.push_back(&cosets[size_t(ci)]);
    }
  }
  {
    std::vector<Bitset> masks;
    std::vector<std::string> labels;
    for (const Coset* c : keep) {
      masks.push_back(c->mask);
      labels.push_back(g.perm(c->rep).cycle_string() + "*H" + std::to_string(c->subgroup));
    }
    out.nonsaturating = poset_from_masks(std::move(masks), std::move(labels), Provenance::Relative);
  }
  return out;
}

}  // namespace grptopo
