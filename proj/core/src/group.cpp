#include "grptopo/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "grptopo/errors.hpp"

namespace grptopo {

namespace {

size_t hash_images(const std::vector<int>& img) {
  size_t h = 0xcbf29ce484222325ULL;
  for (int v : img) {
    h ^= size_t(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Group Group::from_generators(int degree, std::vector<Permutation> generators,
                             std::string name) {
  if (degree <= 0) throw DomainError("group degree must be positive");
  for (const auto& g : generators)
    if (g.degree() != degree) throw DomainError("generator degree mismatch");

  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->name = std::move(name);

  // Right-multiplication closure from the identity; in a finite group the
  // generated sub-semigroup is the generated subgroup.
  std::set<Permutation> seen;
  std::deque<Permutation> work;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    Permutation w = std::move(work.front());
    work.pop_front();
    for (const auto& g : generators) {
      Permutation p = w * g;
      if (seen.insert(p).second) {
        if ((long long)seen.size() > kMaxEnumeratedOrder)
          throw CapExceeded("group enumeration exceeds " +
                            std::to_string(kMaxEnumeratedOrder) + " elements");
        work.push_back(std::move(p));
      }
    }
  }

  d->elements.assign(seen.begin(), seen.end());  // std::set is already sorted
  for (int i = 0; i < int(d->elements.size()); ++i)
    d->index_buckets[hash_images(d->elements[i].images())].push_back(i);

  Group result;
  result.d_ = std::move(d);
  for (const auto& g : generators) {
    int idx = result.index_of(g);
    if (idx != 0 || g.is_identity()) result.d_->gen_idx.push_back(idx);
  }
  // Deduplicate while preserving order.
  {
    std::vector<int> uniq;
    for (int i : result.d_->gen_idx)
      if (std::find(uniq.begin(), uniq.end(), i) == uniq.end()) uniq.push_back(i);
    result.d_->gen_idx = std::move(uniq);
  }
  if (result.d_->gen_idx.empty()) result.d_->gen_idx.push_back(0);
  return result;
}

int Group::index_of(const Permutation& p) const {
  if (p.degree() != d_->degree) return -1;
  auto it = d_->index_buckets.find(hash_images(p.images()));
  if (it == d_->index_buckets.end()) return -1;
  for (int i : it->second)
    if (d_->elements[i] == p) return i;
  return -1;
}

void Group::ensure_tables() const {
  std::call_once(d_->tables_once, [this] {
    const size_t n = d_->elements.size();
    d_->mult.resize(n * n);
    d_->invt.resize(n);
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) {
        int idx = index_of(d_->elements[a] * d_->elements[b]);
        d_->mult[a * n + b] = idx;
      }
      d_->invt[a] = index_of(d_->elements[a].inverse());
    }
  });
}

Bitset Group::closure(const std::vector<int>& seed) const {
  ensure_tables();
  const int n = int(order());
  Bitset members(n);
  members.set(0);
  std::vector<int> work;
  work.push_back(0);
  for (int s : seed)
    if (!members.test(s)) {
      members.set(s);
      work.push_back(s);
    }
  for (size_t k = 0; k < work.size(); ++k) {
    int w = work[k];
    for (int s : seed) {
      int p = mul(w, s);
      if (!members.test(p)) {
        members.set(p);
        work.push_back(p);
      }
    }
  }
  return members;
}

std::vector<int> Group::closure_list(const std::vector<int>& seed) const {
  return closure(seed).to_indices();
}

bool Group::is_abelian() const {
  for (int a : d_->gen_idx)
    for (int b : d_->gen_idx)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Bitset Group::derived_subgroup() const {
  const int n = int(order());
  std::vector<int> comms;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = mul(mul(a, b), mul(inv(a), inv(b)));
      if (c != 0) comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure(comms);
}

bool Group::is_solvable() const {
  // Derived series on element masks.
  Bitset cur(static_cast<int>(order()));
  for (int i = 0; i < int(order()); ++i) cur.set(i);
  while (cur.count() > 1) {
    std::vector<int> members = cur.to_indices();
    std::vector<int> comms;
    for (int a : members)
      for (int b : members) {
        int c = mul(mul(a, b), mul(inv(a), inv(b)));
        if (c != 0) comms.push_back(c);
      }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    Bitset next = closure(comms);
    if (next == cur) return false;  // perfect subgroup reached
    cur = next;
  }
  return true;
}

std::string Group::canonical_key() const {
  std::ostringstream os;
  os << d_->degree << ';';
  for (const auto& e : d_->elements) {
    for (int v : e.images()) os << v << ',';
    os << '|';
  }
  return os.str();
}

}  // namespace grptopo
