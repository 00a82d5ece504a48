#pragma once

#include <map>
#include <string>
#include <vector>

#include "grptopo/homology.hpp"

namespace grptopo {

/// Reduced Betti ranks keyed by dimension. Dimension -1 (rank 1) encodes the
/// empty complex, the unit for joins. Zero entries are dropped.
using BettiVector = std::map<int, long long>;

BettiVector betti_of(const HomologySummary& h);

/// r_k(X*Y) = sum over i+j = k-1 of r_i(X) * r_j(Y), i,j >= -1.
BettiVector join_betti(const BettiVector& a, const BettiVector& b);

/// Join with two points: a dimension shift.
BettiVector suspension_betti(const BettiVector& a);

/// Componentwise sum (wedge of well-pointed nonempty spaces).
BettiVector wedge_betti(const std::vector<BettiVector>& parts);

/// A bouquet of `count` spheres of the given dimension; count 0 is a point.
BettiVector sphere_betti(long long count, int dim);

bool betti_equal(const BettiVector& a, const BettiVector& b);
std::string betti_to_string(const BettiVector& b);

}  // namespace grptopo
