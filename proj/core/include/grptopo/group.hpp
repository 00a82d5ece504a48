#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "grptopo/bitset.hpp"
#include "grptopo/permutation.hpp"

namespace grptopo {

/// Hard ceiling on element enumeration; guards runaway inputs from group files.
inline constexpr long long kMaxEnumeratedOrder = 200000;

/// A finite permutation group with a fully materialized, canonically indexed
/// element table. Elements are sorted by image tuple, so index 0 is always the
/// identity and indices are stable across runs. Immutable after construction;
/// the Cayley and inverse tables are built lazily and are safe to share across
/// threads.
class Group {
 public:
  Group() = default;

  static Group from_generators(int degree, std::vector<Permutation> generators,
                               std::string name = "");

  bool valid() const { return bool(d_); }
  int degree() const { return d_->degree; }
  long long order() const { return (long long)d_->elements.size(); }
  const std::string& name() const { return d_->name; }
  const std::vector<Permutation>& elements() const { return d_->elements; }
  const Permutation& perm(int i) const { return d_->elements[i]; }
  const std::vector<int>& generator_indices() const { return d_->gen_idx; }

  /// Canonical index of p, or -1 when p is not an element.
  int index_of(const Permutation& p) const;

  int identity() const { return 0; }
  int mul(int a, int b) const {
    ensure_tables();
    return d_->mult[size_t(a) * d_->elements.size() + b];
  }
  int inv(int a) const {
    ensure_tables();
    return d_->invt[a];
  }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }

  long long element_order(int a) const { return d_->elements[a].order(); }

  /// Closure of the given element indices under multiplication (a subgroup,
  /// since the group is finite). Identity is always included.
  Bitset closure(const std::vector<int>& seed) const;

  /// Sorted member list variant of closure().
  std::vector<int> closure_list(const std::vector<int>& seed) const;

  bool is_abelian() const;

  /// Derived subgroup [G,G] as an element mask.
  Bitset derived_subgroup() const;

  /// Derived series reaches the trivial group.
  bool is_solvable() const;

  /// Stable content key: degree plus all element image tuples.
  std::string canonical_key() const;

  bool same_object(const Group& o) const { return d_.get() == o.d_.get(); }

 private:
  struct Data {
    int degree = 0;
    std::string name;
    std::vector<Permutation> elements;  // sorted by image tuple
    std::vector<int> gen_idx;
    std::unordered_map<size_t, std::vector<int>> index_buckets;  // hash -> indices
    mutable std::once_flag tables_once;
    mutable std::vector<int32_t> mult;
    mutable std::vector<int32_t> invt;
  };

  void ensure_tables() const;

  std::shared_ptr<Data> d_;
};

}  // namespace grptopo
