#pragma once

#include "grptopo/betti.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// Closed-form homotopy type of the coset or subgroup order complex of a
/// finite solvable group: a bouquet of `count` spheres of dimension
/// `dimension`. Dimension -1 encodes the empty complex (one (-1)-sphere);
/// count 0 encodes a point (contractible).
struct SpherePrediction {
  enum class Target { CosetPoset, SubgroupPoset };
  Target target = Target::CosetPoset;
  long long count = 0;
  int dimension = 0;
  bool contractible = false;  // subgroup poset with an uncomplemented factor
  bool empty_poset = false;

  BettiVector expected_betti() const;
  std::string to_string() const;
};

/// Bouquet of |prod(c_i * |N_i/N_{i-1}| - 1)| spheres of dimension d-1, where
/// d counts the complemented chief factors. Requires a solvable group.
SpherePrediction predict_coset_spheres(const Group& g,
                                       long long order_cap = kDefaultOrderCap);

/// Bouquet of prod(c_i) spheres of dimension d(G)-2; contractible as soon as
/// one chief factor is uncomplemented. Requires a solvable nontrivial group.
SpherePrediction predict_subgroup_spheres(const Group& g,
                                          long long order_cap = kDefaultOrderCap);

}  // namespace grptopo
