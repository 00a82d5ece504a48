#include "grptopo/action.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "grptopo/errors.hpp"

namespace grptopo {

PermAction coset_action(const SubgroupLattice& lat, int subgroup_id) {
  if (subgroup_id == lat.full_id()) throw DomainError("coset action needs a proper subgroup");
  const Group& g = lat.group();
  auto cosets = lat.cosets_of(subgroup_id);
  const int m = int(cosets.size());
  const int n = int(g.order());
  std::vector<int> coset_of((size_t)n);
  for (int c = 0; c < m; ++c)
    for (int e : cosets[c].members) coset_of[size_t(e)] = c;

  PermAction a;
  a.acting = g;
  a.points = m;
  a.table.assign(size_t(n), std::vector<int>(size_t(m)));
  for (int e = 0; e < n; ++e)
    for (int c = 0; c < m; ++c) a.table[size_t(e)][size_t(c)] = coset_of[size_t(g.mul(e, cosets[c].rep))];
  return a;
}

bool is_two_transitive(const PermAction& a) {
  const int m = a.points;
  if (m < 2) return false;
  // Orbit of the ordered pair (0,1) under the generators.
  std::vector<char> seen(size_t(m) * size_t(m), 0);
  std::vector<std::pair<int, int>> work{{0, 1}};
  seen[1] = 1;
  size_t found = 1;
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int gen : a.acting.generator_indices()) {
      int gx = a.table[size_t(gen)][size_t(x)], gy = a.table[size_t(gen)][size_t(y)];
      size_t key = size_t(gx) * size_t(m) + size_t(gy);
      if (!seen[key]) {
        seen[key] = 1;
        ++found;
        work.emplace_back(gx, gy);
      }
    }
  }
  return found == size_t(m) * size_t(m - 1);
}

Group action_image(const PermAction& a) {
  std::vector<Permutation> gens;
  for (int gen : a.acting.generator_indices()) gens.emplace_back(a.table[size_t(gen)]);
  return Group::from_generators(a.points, gens, a.acting.name() + "-image");
}

GeneratingPairClasses generating_pair_classes(const Group& g, const PermAction& aut,
                                              long long a, long long b) {
  const int n = int(g.order());
  if (aut.points != n) throw DomainError("automorphism action must act on the element set");
  for (int gen : aut.acting.generator_indices()) {
    const auto& t = aut.table[size_t(gen)];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (t[size_t(g.mul(x, y))] != g.mul(t[size_t(x)], t[size_t(y)]))
          throw DomainError("action is not by automorphisms");
  }

  // Membership in a maximal subgroup decides <x,y> = G quickly.
  const SubgroupLattice& lat = lattice_of(g);
  const auto& maximals = lat.maximal_ids();
  auto generates = [&](int x, int y) {
    for (int m : maximals)
      if (lat.sub(m).mask.test(x) && lat.sub(m).mask.test(y)) return false;
    return true;
  };

  std::vector<int> xs, ys;
  for (int e = 1; e < n; ++e) {
    if (g.element_order(e) == a) xs.push_back(e);
    if (g.element_order(e) == b) ys.push_back(e);
  }

  GeneratingPairClasses out;
  std::vector<char> in_set(size_t(n) * size_t(n), 0);
  for (int x : xs)
    for (int y : ys)
      if (generates(x, y)) {
        in_set[size_t(x) * size_t(n) + size_t(y)] = 1;
        ++out.pair_count;
      }

  std::vector<char> visited(size_t(n) * size_t(n), 0);
  for (int x : xs) {
    for (int y : ys) {
      size_t key = size_t(x) * size_t(n) + size_t(y);
      if (!in_set[key] || visited[key]) continue;
      ++out.class_count;
      out.representatives.emplace_back(x, y);
      std::vector<std::pair<int, int>> work{{x, y}};
      visited[key] = 1;
      while (!work.empty()) {
        auto [u, v] = work.back();
        work.pop_back();
        for (int gen : aut.acting.generator_indices()) {
          int gu = aut.table[size_t(gen)][size_t(u)], gv = aut.table[size_t(gen)][size_t(v)];
          size_t k2 = size_t(gu) * size_t(n) + size_t(gv);
          if (!visited[k2]) {
            if (!in_set[k2]) throw DomainError("orbit left the generating-pair set");
            visited[k2] = 1;
            work.emplace_back(gu, gv);
          }
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<long long> order_profile(const Group& g) {
  std::vector<long long> prof(size_t(g.order()));
  for (int e = 0; e < int(g.order()); ++e) prof[size_t(e)] = g.element_order(e);
  std::sort(prof.begin(), prof.end());
  return prof;
}

/// Small generating sequence picked greedily by index.
std::vector<int> generating_sequence(const Group& g) {
  std::vector<int> gens;
  Bitset closed = g.closure({});
  for (int e = 1; e < int(g.order()); ++e) {
    if (closed.test(e)) continue;
    gens.push_back(e);
    closed = g.closure(gens);
    if (closed.count() == g.order()) break;
  }
  return gens;
}

/// Attempts to extend gens -> images to a full isomorphism; the closure walk
/// both defines the map and checks it is multiplicative and injective.
bool extends_to_isomorphism(const Group& a, const Group& b, const std::vector<int>& gens,
                            const std::vector<int>& images) {
  const int n = int(a.order());
  std::vector<int> phi(size_t(n), -1);
  std::vector<char> hit(size_t(n), 0);
  phi[0] = 0;
  hit[0] = 1;
  std::vector<int> work{0};
  for (size_t w = 0; w < work.size(); ++w) {
    int x = work[w];
    for (size_t j = 0; j < gens.size(); ++j) {
      int y = a.mul(x, gens[j]);
      int img = b.mul(phi[size_t(x)], images[j]);
      if (phi[size_t(y)] < 0) {
        if (hit[size_t(img)]) return false;
        phi[size_t(y)] = img;
        hit[size_t(img)] = 1;
        work.push_back(y);
      } else if (phi[size_t(y)] != img) {
        return false;
      }
    }
  }
  if (int(work.size()) != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi[size_t(a.mul(x, y))] != b.mul(phi[size_t(x)], phi[size_t(y)])) return false;
  return true;
}

}  // namespace

bool are_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  if (order_profile(a) != order_profile(b)) return false;
  std::vector<int> gens = generating_sequence(a);
  if (gens.empty()) return true;  // both trivial

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    long long ord = a.element_order(gens[j]);
    for (int e = 0; e < int(b.order()); ++e)
      if (b.element_order(e) == ord) candidates[j].push_back(e);
  }

  std::vector<int> images(gens.size());
  std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
    if (depth == gens.size()) return extends_to_isomorphism(a, b, gens, images);
    for (int cand : candidates[depth]) {
      images[depth] = cand;
      // Partial consistency: the chosen prefix must generate an isomorphic copy.
      std::vector<int> prefix_a(gens.begin(), gens.begin() + depth + 1);
      std::vector<int> prefix_b(images.begin(), images.begin() + depth + 1);
      if (a.closure(prefix_a).count() != b.closure(prefix_b).count()) continue;
      if (rec(depth + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

bool is_coprime(const Group& h, const Group& k, long long order_cap) {
  const SubgroupLattice& hl = lattice_of(h, order_cap);
  const SubgroupLattice& kl = lattice_of(k, order_cap);
  // Quotients H/M for all normal M, keyed by order; trivial quotient ignored.
  std::vector<std::pair<long long, Group>> hq, kq;
  for (int m : hl.normal_ids()) {
    long long q = h.order() / hl.sub(m).order;
    if (q > 1) hq.emplace_back(q, quotient_group(hl, m).group);
  }
  for (int m : kl.normal_ids()) {
    long long q = k.order() / kl.sub(m).order;
    if (q > 1) kq.emplace_back(q, quotient_group(kl, m).group);
  }
  for (auto& [qo, qh] : hq)
    for (auto& [ko, qk] : kq)
      if (qo == ko && are_isomorphic(qh, qk)) return false;
  return true;
}

}  // namespace grptopo
