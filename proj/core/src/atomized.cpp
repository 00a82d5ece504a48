#include "grptopo/atomized.hpp"

#include <algorithm>
#include <unordered_map>

#include "grptopo/errors.hpp"

namespace grptopo {

namespace {

/// Least element of a nonempty up-set intersection, or -1 when two or more
/// minimal elements exist.
int least_of(const FinitePoset& p, const Bitset& set) {
  int minimal = -1;
  for (int j = set.find_first(); j >= 0; j = set.find_next(j)) {
    if (!set.intersects(p.below(j))) {
      if (minimal >= 0) return -1;
      minimal = j;
    }
  }
  return minimal;
}

std::vector<Bitset> reflexive_up_sets(const FinitePoset& p) {
  std::vector<Bitset> up(size_t(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    up[size_t(i)] = p.above(i);
    up[size_t(i)].set(i);
  }
  return up;
}

}  // namespace

struct AtomizeAccess {
  static AtomizedView make(FinitePoset p, std::vector<int> atoms, std::vector<Bitset> up) {
    AtomizedView v;
    v.poset_ = std::move(p);
    v.atoms_ = std::move(atoms);
    v.up_closed_ = std::move(up);
    return v;
  }
};

int AtomizedView::join(const std::vector<int>& atom_elements) const {
  if (atom_elements.empty()) throw DomainError("join of an empty atom set");
  Bitset u = up_closed_[size_t(atom_elements[0])];
  for (size_t i = 1; i < atom_elements.size(); ++i)
    u &= up_closed_[size_t(atom_elements[i])];
  if (u.none()) return kWhole;
  int least = least_of(poset_, u);
  if (least < 0) throw DomainError("bounded atom set without a join in an accepted view");
  return least;
}

AtomizeResult atomize(const FinitePoset& p) {
  AtomizeResult out;
  std::vector<int> atoms = p.minimal_elements();
  std::vector<Bitset> up = reflexive_up_sets(p);
  // Every element of a finite poset lies above a minimal element, so only the
  // bounded-join condition needs checking. Walk distinct intersections of
  // atom up-sets; in an atomized poset each one equals up(join) so there are
  // at most |P| states.
  std::unordered_map<Bitset, std::vector<int>, BitsetHash> state;
  std::vector<Bitset> frontier;
  for (int a : atoms) {
    if (state.emplace(up[size_t(a)], std::vector<int>{a}).second)
      frontier.push_back(up[size_t(a)]);
  }
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const Bitset& u : frontier) {
      std::vector<int> witness = state.at(u);
      for (int a : atoms) {
        Bitset u2 = u & up[size_t(a)];
        if (u2.none()) continue;  // unbounded set: no join required
        if (state.count(u2)) continue;
        std::vector<int> w2 = witness;
        if (std::find(w2.begin(), w2.end(), a) == w2.end()) w2.push_back(a);
        if (least_of(p, u2) < 0) {
          std::sort(w2.begin(), w2.end());
          out.rejection_witness = std::move(w2);
          return out;
        }
        state.emplace(u2, std::move(w2));
        next.push_back(u2);
      }
    }
    frontier = std::move(next);
  }
  out.view = AtomizeAccess::make(p, std::move(atoms), std::move(up));
  return out;
}

bool no_k_atoms_generate(const AtomizedView& v, int k) {
  const auto& atoms = v.atoms();
  const int m = int(atoms.size());
  if (k <= 0 || k > m) return true;
  std::vector<Bitset> ups = reflexive_up_sets(v.poset());

  // Depth-first over k-subsets carrying the running up-set intersection;
  // an empty intersection is a generating witness and exits immediately.
  int depth = 0;
  std::vector<Bitset> stack_up;
  std::function<bool(int)> walk = [&](int start) -> bool {
    if (depth == k) return true;
    for (int i = start; i < m; ++i) {
      if (m - i < k - depth) break;
      Bitset u = stack_up.empty() ? ups[size_t(atoms[size_t(i)])]
                                  : (stack_up.back() & ups[size_t(atoms[size_t(i)])]);
      if (u.none()) return false;
      stack_up.push_back(std::move(u));
      ++depth;
      bool ok = walk(i + 1);
      --depth;
      stack_up.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return walk(0);
}

SimplicialComplex minimal_cover(const AtomizedView& v, MinimalCoverOptions opts) {
  const auto& atoms = v.atoms();
  const int m = int(atoms.size());
  const FinitePoset& p = v.poset();

  int max_dim = opts.max_dim;
  bool truncated = false;
  if (max_dim < 0) {
    if (m <= 200) {
      max_dim = m - 1;
    } else {
      max_dim = 4;
      truncated = true;
    }
  } else if (max_dim < m - 1) {
    truncated = true;
  }

  SimplicialComplex k;
  k.vertex_count = m;
  for (int i = 0; i < m; ++i) k.vertex_labels.push_back(p.label(atoms[size_t(i)]));
  if (truncated) k.truncation_dim = max_dim;

  std::vector<Bitset> ups((size_t)m);
  for (int i = 0; i < m; ++i) {
    ups[size_t(i)] = p.above(atoms[size_t(i)]);
    ups[size_t(i)].set(atoms[size_t(i)]);
  }

  long long emitted = 0;
  auto emit = [&](int d, const std::vector<int>& face) {
    if (int(k.faces.size()) <= d) k.faces.emplace_back();
    k.faces[size_t(d)].push_back(face);
    if (++emitted > opts.max_faces) throw CapExceeded("minimal cover exceeds face cap");
  };

  // Level-by-level growth; a face extends only by larger atoms, and the
  // running intersection of up-sets certifies the join exists.
  std::vector<std::pair<std::vector<int>, Bitset>> level;
  for (int i = 0; i < m; ++i) {
    emit(0, {i});
    level.emplace_back(std::vector<int>{i}, ups[size_t(i)]);
  }
  for (int d = 1; d <= max_dim && !level.empty(); ++d) {
    std::vector<std::pair<std::vector<int>, Bitset>> next;
    for (auto& [face, u] : level) {
      for (int a = face.back() + 1; a < m; ++a) {
        Bitset u2 = u & ups[size_t(a)];
        if (u2.none()) continue;
        std::vector<int> f2 = face;
        f2.push_back(a);
        emit(d, f2);
        next.emplace_back(std::move(f2), std::move(u2));
      }
    }
    level = std::move(next);
  }
  return k;
}

}  // namespace grptopo
