#pragma once

#include <vector>

#include "grptopo/sparse_matrix.hpp"

namespace grptopo {

struct SNFResult {
  std::vector<long long> divisors;  // d1 | d2 | ..., all positive
  long long rank = 0;               // count of nonzero divisors
  bool used_bignum = false;         // int64 overflowed; rerun used exact bignums
  bool early_stopped = false;

  std::vector<long long> nontrivial_divisors() const {
    std::vector<long long> out;
    for (long long d : divisors)
      if (d != 1) out.push_back(d);
    return out;
  }
};

struct SmithOptions {
  /// Stop once this many pivots were found and every divisor so far is 1.
  /// The caller then knows the image lattice contains a saturated sublattice
  /// of that rank; remaining columns cannot change it. -1 disables.
  long long early_stop_unimodular_rank = -1;
};

/// Elementary divisors by fraction-free sparse elimination. Pivots are chosen
/// Markowitz-style (minimal fill) with unit entries preferred; non-unit pivots
/// are reduced to gcds with unimodular two-row/two-column combinations, so all
/// arithmetic stays integral. Entries that outgrow int64 trigger a
/// transparent rerun over arbitrary-precision integers.
SNFResult smith_normal_form(const SparseIntMatrix& m, SmithOptions opts = {});

}  // namespace grptopo
