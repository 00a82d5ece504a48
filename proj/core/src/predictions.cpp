#include "grptopo/predictions.hpp"

#include <sstream>

#include "grptopo/errors.hpp"

namespace grptopo {

BettiVector SpherePrediction::expected_betti() const {
  return sphere_betti(count, dimension);
}

std::string SpherePrediction::to_string() const {
  std::ostringstream os;
  if (contractible) return "contractible";
  if (empty_poset) return "empty";
  os << count << " sphere(s) of dimension " << dimension;
  return os.str();
}

SpherePrediction predict_coset_spheres(const Group& g, long long order_cap) {
  if (!g.is_solvable()) throw DomainError("coset sphere prediction needs a solvable group");
  ChiefSeriesData cs = chief_series(g, order_cap);
  SpherePrediction p;
  p.target = SpherePrediction::Target::CosetPoset;
  long long prod = 1;
  int complemented = 0;
  for (int i = 0; i < cs.length; ++i) {
    prod *= cs.complement_counts[size_t(i)] * cs.factor_orders[size_t(i)] - 1;
    if (cs.complement_counts[size_t(i)] != 0) ++complemented;
  }
  p.count = prod < 0 ? -prod : prod;
  p.dimension = complemented - 1;
  p.empty_poset = (p.dimension == -1 && p.count == 1);
  return p;
}

SpherePrediction predict_subgroup_spheres(const Group& g, long long order_cap) {
  if (!g.is_solvable()) throw DomainError("subgroup sphere prediction needs a solvable group");
  if (g.order() == 1) throw DomainError("subgroup poset of the trivial group is undefined here");
  ChiefSeriesData cs = chief_series(g, order_cap);
  SpherePrediction p;
  p.target = SpherePrediction::Target::SubgroupPoset;
  long long prod = 1;
  for (long long c : cs.complement_counts) prod *= c;
  p.count = prod;
  p.dimension = cs.length - 2;
  p.contractible = (prod == 0);
  p.empty_poset = (!p.contractible && p.dimension == -1 && p.count == 1);
  return p;
}

}  // namespace grptopo
