#pragma once

#include <optional>
#include <string>

#include "grptopo/homology.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

enum class Pi1Status { CertifiedTrivial, CertifiedNontrivial, Inconclusive };

std::string pi1_status_name(Pi1Status s);

/// Verdicts about C(G) and L(G) with the certifying argument recorded. Every
/// certified claim carries either a closed-form witness or a verifier result;
/// "inconclusive" is a valid outcome.
struct ConnectivityClassification {
  // C(G) connectedness: disconnected exactly for cyclic prime-power groups.
  bool coset_connected = false;
  bool coset_connected_verified = false;  // component count recomputed
  std::string coset_connected_provenance;

  Pi1Status coset_pi1 = Pi1Status::Inconclusive;
  std::string coset_pi1_provenance;
  long long coset_h1_lower_bound = 0;  // for nontrivial verdicts

  bool in_F = false;        // A ⋊ Z/p, A elementary abelian with empty invariant poset
  bool in_F_prime = false;  // same with A nontrivial

  bool subgroup_connected = false;
  std::string subgroup_connected_provenance;

  std::optional<long long> subgroup_pi1_free_rank;  // when the wedge argument applies
  std::string subgroup_pi1_provenance;
};

struct ClassifyInputs {
  /// Computed homology, when available, for cross-checks and rank witnesses.
  const HomologySummary* coset_homology = nullptr;
  const HomologySummary* subgroup_homology = nullptr;
  /// A propagation certificate for M(G), when one was produced.
  std::optional<bool> pi1_certificate;
};

ConnectivityClassification classify_connectivity(const Group& g, const ClassifyInputs& in = {},
                                                 long long order_cap = kDefaultOrderCap);

/// Membership of G in the family A ⋊ Z/p (A elementary abelian, no proper
/// nontrivial Z/p-invariant subgroup). Sets both flags.
void classify_f_family(const SubgroupLattice& lat, bool* in_f, bool* in_f_prime);

/// No proper nontrivial normal subgroup (nontrivial groups only).
bool is_simple_group(const SubgroupLattice& lat);

}  // namespace grptopo
