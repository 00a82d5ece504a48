#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// mu(H, G) for every subgroup, by downward recursion from mu(G, G) = 1.
struct MobiusTable {
  std::vector<long long> mu;  // indexed by lattice subgroup id

  long long at(int id) const { return mu[size_t(id)]; }
};

MobiusTable mobius_table(const SubgroupLattice& lat);

/// Exact rational with reduced representation, den > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  void reduce();
  Rational& operator+=(const Rational& o);
  bool is_integer() const { return den == 1; }
  std::string to_string() const;
};

/// P(G, s) = sum over subgroups of mu(H,G) * (G:H)^(-s), evaluated exactly.
Rational prob_zeta(const SubgroupLattice& lat, const MobiusTable& table, long long s);

struct ZetaReport {
  std::map<long long, Rational> values;    // requested s -> P(G, s)
  long long p_at_minus_one = 0;
  std::optional<long long> chi_reduced;    // from the order complex, when computed
  bool identity_checked = false;
  bool identity_holds = false;             // P(G,-1) == -chi~
};

ZetaReport zeta_report(const SubgroupLattice& lat, const std::vector<long long>& s_values,
                       std::optional<long long> chi_reduced);

}  // namespace grptopo
