#pragma once

#include <vector>

#include "grptopo/group.hpp"

namespace grptopo {

/// An element of PSL2(F_p) written x -> (ax+b)/(cx+d), det = 1, stored with a
/// canonical sign: the first nonzero coefficient lies in {1..(p-1)/2}.
struct MobiusTransform {
  int a = 1, b = 0, c = 0, d = 1;
  int p = 0;

  int trace_squared() const { return int((long long)(a + d) * (a + d) % p); }
};

/// PSL2(F_p) acting on the projective line; point indices 0..p-1 are the
/// field elements and point p is infinity.
struct Psl2Model {
  int p = 0;
  Group group;
  std::vector<MobiusTransform> labels;  // by element index
};

/// Memoized model for an odd prime p (order must fit the enumeration cap).
const Psl2Model& psl2_model(int p);

/// Element order from tr^2, valid for p = 7 and non-identity input.
/// tr^2 in {0,1,2,4} maps to order {2,3,4,7}; anything else is rejected.
long long order_from_trace(int p, int trace_squared);

/// Aut(PSL2(F_p)) = PGL2(F_p) acting on the PSL2 element set by conjugation,
/// realized as a permutation group of degree |PSL2(F_p)|.
Group pgl2_conjugation_action(const Psl2Model& model);

}  // namespace grptopo
