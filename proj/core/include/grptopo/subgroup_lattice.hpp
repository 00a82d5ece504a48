#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "grptopo/bitset.hpp"
#include "grptopo/group.hpp"

namespace grptopo {

/// Default order cap for lattice-level computations (spec default).
inline constexpr long long kDefaultOrderCap = 400;
/// Soft guard on the number of subgroups a lattice may hold.
inline constexpr size_t kMaxSubgroups = 60000;

struct Subgroup {
  int id = -1;
  long long order = 0;
  std::vector<int> members;  // sorted element indices into the parent group
  Bitset mask;
  std::vector<int> witness;  // generating witnesses
};

struct Coset {
  int subgroup = -1;  // lattice subgroup id
  int rep = -1;       // minimal element index in the coset
  std::vector<int> members;
  Bitset mask;
};

/// The complete subgroup lattice of a finite group, found by seeding with all
/// cyclic subgroups and closing under pairwise joins. Subgroups are sorted by
/// (order, member list), so ids are canonical.
class SubgroupLattice {
 public:
  SubgroupLattice(Group g, long long order_cap);

  const Group& group() const { return g_; }
  int count() const { return int(subs_.size()); }
  const Subgroup& sub(int i) const { return subs_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }

  int trivial_id() const { return 0; }
  int full_id() const { return int(subs_.size()) - 1; }

  /// Lattice id of the subgroup with the given member mask, or -1.
  int find(const Bitset& mask) const;

  /// Subgroup generated by the given elements (always present in the table).
  int generated(const std::vector<int>& elems) const;

  /// Containment a <= b.
  bool leq(int a, int b) const { return above_[a].test(b); }
  /// Ids of subgroups containing a (including a).
  const Bitset& above(int a) const { return above_[a]; }

  bool is_normal(int i) const { return normal_flag_[i]; }
  const std::vector<int>& normal_ids() const { return normal_ids_; }
  /// Maximal proper subgroups.
  const std::vector<int>& maximal_ids() const { return maximal_ids_; }

  bool is_cyclic(int i) const;
  bool is_elementary_abelian(int i) const;

  /// Intersection as a lattice id.
  int meet(int a, int b) const;
  /// Join (subgroup generated by the union) as a lattice id.
  int join(int a, int b) const;

  /// All left cosets of all proper subgroups, ordered by (subgroup id, rep).
  const std::vector<Coset>& proper_cosets() const;
  /// Left cosets of one subgroup, ordered by rep.
  std::vector<Coset> cosets_of(int subgroup) const;

 private:
  void build_relations();

  Group g_;
  std::vector<Subgroup> subs_;
  std::unordered_map<Bitset, int, BitsetHash> by_mask_;
  std::vector<Bitset> above_;  // above_[i] = { j : subs_[i] <= subs_[j] }
  std::vector<char> normal_flag_;
  std::vector<int> normal_ids_;
  std::vector<int> maximal_ids_;
  mutable std::vector<Coset> cosets_;  // lazy
  mutable std::once_flag cosets_once_;
};

/// Memoized lattice access; keeps the group alive for the process lifetime.
const SubgroupLattice& lattice_of(const Group& g, long long order_cap = kDefaultOrderCap);

/// Conjugation-invariance test for an arbitrary element mask.
bool is_normal_mask(const Group& g, const Bitset& mask);

struct ComplementSet {
  int normal_subgroup = -1;
  std::vector<int> complements;  // lattice ids
  long long count() const { return (long long)complements.size(); }
};

/// All K with K ∩ N = 1 and KN = G, for N normal in G.
ComplementSet complements(const SubgroupLattice& lat, int normal_id);

struct QuotientGroup {
  Group group;
  std::vector<int> projection;  // parent element index -> quotient element index
};

/// G/N as a permutation group on the left-coset space of N.
QuotientGroup quotient_group(const SubgroupLattice& lat, int normal_id);

struct ChiefSeriesData {
  std::vector<int> series;                    // lattice ids, trivial .. full
  std::vector<long long> factor_orders;       // |N_i| / |N_{i-1}|
  std::vector<long long> complement_counts;   // c_i, computed in G/N_{i-1}
  int complemented_count = 0;                 // d = #{i : c_i != 0}
  int length = 0;                             // d(G) = series length
};

/// Deterministic chief series: at each step the minimal-order (then lex)
/// normal subgroup of G covering the current term.
ChiefSeriesData chief_series(const Group& g, long long order_cap = kDefaultOrderCap);

}  // namespace grptopo
