#include "grptopo/subgroup_lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "grptopo/errors.hpp"

namespace grptopo {

SubgroupLattice::SubgroupLattice(Group g, long long order_cap) : g_(std::move(g)) {
  if (g_.order() > order_cap)
    throw CapExceeded("group order " + std::to_string(g_.order()) +
                      " exceeds lattice cap " + std::to_string(order_cap));
  const int n = int(g_.order());

  struct Rec {
    Bitset mask;
    std::vector<int> witness;
  };
  std::unordered_map<Bitset, int, BitsetHash> index;
  std::vector<Rec> recs;
  auto add = [&](Bitset mask, std::vector<int> witness) -> int {
    auto it = index.find(mask);
    if (it != index.end()) return -1;
    if (recs.size() >= kMaxSubgroups)
      throw CapExceeded("subgroup count exceeds " + std::to_string(kMaxSubgroups));
    int id = int(recs.size());
    index.emplace(mask, id);
    recs.push_back({std::move(mask), std::move(witness)});
    return id;
  };

  // Seed with the trivial subgroup and every cyclic subgroup.
  add(g_.closure({}), {});
  std::vector<int> frontier;
  for (int e = 1; e < n; ++e) {
    int id = add(g_.closure({e}), {e});
    if (id >= 0) frontier.push_back(id);
  }

  // Close under pairwise joins.
  while (!frontier.empty()) {
    std::vector<int> next;
    size_t known = recs.size();
    for (int a : frontier) {
      for (size_t b = 0; b < known; ++b) {
        if (int(b) == a) continue;
        if (recs[a].mask.subset_of(recs[b].mask) || recs[b].mask.subset_of(recs[a].mask))
          continue;
        std::vector<int> w = recs[a].witness;
        w.insert(w.end(), recs[b].witness.begin(), recs[b].witness.end());
        Bitset cl = g_.closure(w);
        int id = add(std::move(cl), std::move(w));
        if (id >= 0) next.push_back(id);
      }
    }
    frontier = std::move(next);
  }

  // Canonical order: (order, member list).
  std::vector<int> order_of(recs.size());
  std::vector<std::vector<int>> members_of(recs.size());
  for (size_t i = 0; i < recs.size(); ++i) {
    members_of[i] = recs[i].mask.to_indices();
    order_of[i] = int(members_of[i].size());
  }
  std::vector<int> perm(recs.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if (order_of[x] != order_of[y]) return order_of[x] < order_of[y];
    return members_of[x] < members_of[y];
  });

  subs_.resize(recs.size());
  for (size_t pos = 0; pos < perm.size(); ++pos) {
    int src = perm[pos];
    Subgroup& s = subs_[pos];
    s.id = int(pos);
    s.order = order_of[src];
    s.members = std::move(members_of[src]);
    s.mask = std::move(recs[src].mask);
    s.witness = std::move(recs[src].witness);
    by_mask_.emplace(s.mask, s.id);
  }
  build_relations();
}

void SubgroupLattice::build_relations() {
  const int m = count();
  above_.assign(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (subs_[i].order <= subs_[j].order && subs_[i].mask.subset_of(subs_[j].mask))
        above_[i].set(j);

  normal_flag_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    normal_flag_[i] = is_normal_mask(g_, subs_[i].mask) ? 1 : 0;
    if (normal_flag_[i]) normal_ids_.push_back(i);
  }

  for (int i = 0; i < m - 1; ++i) {
    // Maximal: proper with nothing proper strictly above.
    if (above_[i].count() == 2) maximal_ids_.push_back(i);  // itself and G
  }
}

int SubgroupLattice::find(const Bitset& mask) const {
  auto it = by_mask_.find(mask);
  return it == by_mask_.end() ? -1 : it->second;
}

int SubgroupLattice::generated(const std::vector<int>& elems) const {
  int id = find(g_.closure(elems));
  if (id < 0) throw DomainError("closure missing from subgroup table");
  return id;
}

bool SubgroupLattice::is_cyclic(int i) const {
  for (int e : subs_[i].members)
    if (g_.element_order(e) == subs_[i].order) return true;
  return false;
}

bool SubgroupLattice::is_elementary_abelian(int i) const {
  const Subgroup& s = subs_[i];
  if (s.order == 1) return true;
  long long p = g_.element_order(s.members[1]);
  // Prime exponent and commutativity.
  for (int e : s.members)
    if (e != 0 && g_.element_order(e) != p) return false;
  for (int a : s.members)
    for (int b : s.members)
      if (g_.mul(a, b) != g_.mul(b, a)) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

int SubgroupLattice::meet(int a, int b) const {
  Bitset m = subs_[a].mask & subs_[b].mask;
  int id = find(m);
  if (id < 0) throw DomainError("subgroup intersection missing from table");
  return id;
}

int SubgroupLattice::join(int a, int b) const {
  std::vector<int> w = subs_[a].witness;
  w.insert(w.end(), subs_[b].witness.begin(), subs_[b].witness.end());
  return generated(w);
}

const std::vector<Coset>& SubgroupLattice::proper_cosets() const {
  std::call_once(cosets_once_, [this] {
    for (int s = 0; s < count() - 1; ++s) {
      auto cs = cosets_of(s);
      cosets_.insert(cosets_.end(), std::make_move_iterator(cs.begin()),
                     std::make_move_iterator(cs.end()));
    }
  });
  return cosets_;
}

std::vector<Coset> SubgroupLattice::cosets_of(int subgroup) const {
  const int n = int(g_.order());
  const Subgroup& h = subs_[subgroup];
  std::vector<Coset> out;
  Bitset covered(n);
  for (int x = 0; x < n; ++x) {
    if (covered.test(x)) continue;
    Coset c;
    c.subgroup = subgroup;
    c.rep = x;  // ascending scan makes the first representative minimal
    c.mask = Bitset(n);
    for (int m : h.members) {
      int y = g_.mul(x, m);
      c.mask.set(y);
      covered.set(y);
    }
    c.members = c.mask.to_indices();
    out.push_back(std::move(c));
  }
  return out;
}

const SubgroupLattice& lattice_of(const Group& g, long long order_cap) {
  if (g.order() > order_cap)
    throw CapExceeded("group order " + std::to_string(g.order()) +
                      " exceeds lattice cap " + std::to_string(order_cap));
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<SubgroupLattice>> store;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = g.canonical_key();
  auto it = store.find(key);
  if (it == store.end())
    it = store.emplace(key, std::make_unique<SubgroupLattice>(g, order_cap)).first;
  return *it->second;
}

bool is_normal_mask(const Group& g, const Bitset& mask) {
  for (int gen : g.generator_indices()) {
    for (int h = mask.find_first(); h >= 0; h = mask.find_next(h))
      if (!mask.test(g.conj(gen, h))) return false;
  }
  return true;
}

ComplementSet complements(const SubgroupLattice& lat, int normal_id) {
  if (!lat.is_normal(normal_id)) throw DomainError("complements: subgroup is not normal");
  ComplementSet out;
  out.normal_subgroup = normal_id;
  const Subgroup& n = lat.sub(normal_id);
  long long target = lat.group().order() / n.order;
  for (int k = 0; k < lat.count(); ++k) {
    if (lat.sub(k).order != target) continue;
    Bitset inter = lat.sub(k).mask & n.mask;
    if (inter.count() == 1) out.complements.push_back(k);  // |K||N| = |G| forces KN = G
  }
  return out;
}

QuotientGroup quotient_group(const SubgroupLattice& lat, int normal_id) {
  if (!lat.is_normal(normal_id)) throw DomainError("quotient: subgroup is not normal");
  const Group& g = lat.group();
  const int n = int(g.order());
  auto cosets = lat.cosets_of(normal_id);
  const int m = int(cosets.size());
  std::vector<int> coset_of(n, -1);
  for (int c = 0; c < m; ++c)
    for (int e : cosets[c].members) coset_of[e] = c;

  auto perm_of = [&](int e) {
    std::vector<int> img(m);
    for (int c = 0; c < m; ++c) img[c] = coset_of[g.mul(e, cosets[c].rep)];
    return Permutation(img);
  };

  std::vector<Permutation> gens;
  for (int gen : g.generator_indices()) gens.push_back(perm_of(gen));
  QuotientGroup out;
  out.group = Group::from_generators(m, gens, g.name() + "/N");
  if (out.group.order() != m) throw DomainError("quotient enumeration mismatch");
  out.projection.resize(n);
  for (int e = 0; e < n; ++e) out.projection[e] = out.group.index_of(perm_of(e));
  return out;
}

ChiefSeriesData chief_series(const Group& g, long long order_cap) {
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  ChiefSeriesData out;
  int cur = lat.trivial_id();
  out.series.push_back(cur);
  while (cur != lat.full_id()) {
    // normal_ids is (order, lex)-sorted, so the first strict extension of cur
    // is a chief factor: anything strictly between would precede it.
    int next = -1;
    for (int m : lat.normal_ids()) {
      if (m == cur || !lat.leq(cur, m)) continue;
      next = m;
      break;
    }
    if (next < 0) throw DomainError("chief series construction stalled");

    QuotientGroup q = quotient_group(lat, cur);
    const SubgroupLattice& qlat = lattice_of(q.group, order_cap);
    Bitset image(int(q.group.order()));
    for (int e : lat.sub(next).members) image.set(q.projection[e]);
    int nbar = qlat.find(image);
    if (nbar < 0) throw DomainError("chief factor image missing in quotient lattice");
    out.complement_counts.push_back(complements(qlat, nbar).count());
    out.factor_orders.push_back(lat.sub(next).order / lat.sub(cur).order);
    out.series.push_back(next);
    cur = next;
  }
  out.length = int(out.series.size()) - 1;
  for (long long c : out.complement_counts)
    if (c != 0) ++out.complemented_count;
  return out;
}

}  // namespace grptopo
