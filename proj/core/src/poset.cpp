#include "grptopo/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "grptopo/errors.hpp"

namespace grptopo {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Generic: return "generic";
    case Provenance::CosetPoset: return "coset";
    case Provenance::SubgroupPoset: return "subgroup";
    case Provenance::Relative: return "relative";
    case Provenance::Invariant: return "invariant";
    case Provenance::Punctured: return "punctured";
    case Provenance::Reduced: return "reduced";
  }
  return "generic";
}

namespace {

void validate_and_fill(std::vector<Bitset>& above, std::vector<Bitset>& below) {
  const int n = int(above.size());
  // Transitive closure (above masks may come from raw pairs).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      Bitset next = above[size_t(i)];
      for (int j = next.find_first(); j >= 0; j = next.find_next(j)) next |= above[size_t(j)];
      if (next != above[size_t(i)]) {
        above[size_t(i)] = std::move(next);
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (above[size_t(i)].test(i)) throw DomainError("poset relation is not irreflexive");
  below.assign(size_t(n), Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = above[size_t(i)].find_first(); j >= 0; j = above[size_t(i)].find_next(j)) {
      if (above[size_t(j)].test(i)) throw DomainError("poset relation is not antisymmetric");
      below[size_t(j)].set(i);
    }
}

}  // namespace

FinitePoset FinitePoset::from_less_pairs(int n, const std::vector<std::pair<int, int>>& less,
                                         std::vector<std::string> labels, Provenance prov) {
  FinitePoset p;
  p.above_.assign(size_t(n), Bitset(n));
  for (auto [i, j] : less) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw DomainError("bad poset relation pair");
    p.above_[size_t(i)].set(j);
  }
  validate_and_fill(p.above_, p.below_);
  p.labels_ = std::move(labels);
  if (p.labels_.empty()) {
    p.labels_.resize(size_t(n));
    for (int i = 0; i < n; ++i) p.labels_[size_t(i)] = std::to_string(i);
  }
  p.prov_ = prov;
  return p;
}

FinitePoset FinitePoset::from_above_masks(std::vector<Bitset> above,
                                          std::vector<std::string> labels, Provenance prov) {
  FinitePoset p;
  p.above_ = std::move(above);
  validate_and_fill(p.above_, p.below_);
  p.labels_ = std::move(labels);
  if (p.labels_.empty()) {
    p.labels_.resize(p.above_.size());
    for (size_t i = 0; i < p.above_.size(); ++i) p.labels_[i] = std::to_string(i);
  }
  p.prov_ = prov;
  return p;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (below_[size_t(i)].none()) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i) {
    const Bitset& up = above_[size_t(i)];
    for (int j = up.find_first(); j >= 0; j = up.find_next(j)) {
      // j covers i when nothing sits strictly between.
      if (!up.intersects(below_[size_t(j)])) out.emplace_back(i, j);
    }
  }
  return out;
}

FinitePoset FinitePoset::restricted_to(const std::vector<int>& keep, Provenance prov) const {
  const int m = int(keep.size());
  std::vector<int> newid(size_t(size()), -1);
  for (int k = 0; k < m; ++k) newid[size_t(keep[size_t(k)])] = k;
  std::vector<Bitset> above((size_t)m, Bitset(m));
  std::vector<std::string> labels((size_t)m);
  for (int k = 0; k < m; ++k) {
    int old = keep[size_t(k)];
    labels[size_t(k)] = labels_[size_t(old)];
    const Bitset& up = above_[size_t(old)];
    for (int j = up.find_first(); j >= 0; j = up.find_next(j))
      if (newid[size_t(j)] >= 0) above[size_t(k)].set(newid[size_t(j)]);
  }
  return from_above_masks(std::move(above), std::move(labels), prov);
}

std::vector<int> FinitePoset::components() const {
  std::vector<int> parent((size_t)size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[size_t(x)] != x) x = parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
    return x;
  };
  for (int i = 0; i < size(); ++i)
    for (int j = above_[size_t(i)].find_first(); j >= 0; j = above_[size_t(i)].find_next(j))
      parent[size_t(find(i))] = find(j);
  std::vector<int> comp(size_t(size()), -1);
  int next = 0;
  for (int i = 0; i < size(); ++i) {
    int r = find(i);
    if (comp[size_t(r)] < 0) comp[size_t(r)] = next++;
    comp[size_t(i)] = comp[size_t(r)];
  }
  return comp;
}

int FinitePoset::component_count() const {
  auto c = components();
  return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

std::string FinitePoset::serialize() const {
  std::ostringstream os;
  os << "poset " << size() << "\n";
  for (auto [i, j] : cover_pairs()) os << i << " < " << j << "\n";
  return os.str();
}

FinitePoset FinitePoset::parse(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  int n = -1;
  in >> kw >> n;
  if (kw != "poset" || n < 0) throw ParseError("poset text must start with 'poset n'");
  std::vector<std::pair<int, int>> less;
  int i;
  std::string rel;
  int j;
  while (in >> i >> rel >> j) {
    if (rel != "<") throw ParseError("expected 'i < j' line");
    less.emplace_back(i, j);
  }
  return from_less_pairs(n, less);
}

bool FinitePoset::is_isomorphic_by(const FinitePoset& other, const std::vector<int>& map) const {
  if (other.size() != size() || int(map.size()) != size()) return false;
  std::vector<char> hit(size_t(size()), 0);
  for (int v : map) {
    if (v < 0 || v >= size() || hit[size_t(v)]) return false;
    hit[size_t(v)] = 1;
  }
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (less(i, j) != other.less(map[size_t(i)], map[size_t(j)])) return false;
  return true;
}

FinitePoset quillen_reduce(const FinitePoset& p) {
  const int n = p.size();
  std::vector<char> live((size_t)n, 1);
  std::vector<int> order((size_t)n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> ideal((size_t)n);
  for (int i = 0; i < n; ++i) ideal[size_t(i)] = p.below(i).count();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ideal[size_t(a)] < ideal[size_t(b)]; });

  Bitset live_mask(n);
  for (int i = 0; i < n; ++i) live_mask.set(i);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : order) {
      if (!live[size_t(i)]) continue;
      Bitset up = p.above(i) & live_mask;
      if (up.none()) continue;
      // Exactly one minimal element makes the live up-set a cone.
      int minimal = -1;
      bool unique = true;
      for (int j = up.find_first(); j >= 0 && unique; j = up.find_next(j)) {
        if (!up.intersects(p.below(j))) {
          if (minimal >= 0) unique = false;
          minimal = j;
        }
      }
      if (minimal >= 0 && unique) {
        live[size_t(i)] = 0;
        live_mask.reset(i);
        changed = true;
      }
    }
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (live[size_t(i)]) keep.push_back(i);
  return p.restricted_to(keep, Provenance::Reduced);
}

}  // namespace grptopo
