#include "grptopo/betti.hpp"

#include <sstream>

#include "grptopo/errors.hpp"

namespace grptopo {

BettiVector betti_of(const HomologySummary& h) {
  BettiVector out;
  for (const auto& [d, r] : h.betti)
    if (r != 0) out[d] = r;
  return out;
}

BettiVector join_betti(const BettiVector& a, const BettiVector& b) {
  BettiVector out;
  for (const auto& [i, ri] : a)
    for (const auto& [j, rj] : b) {
      long long r = ri * rj;
      if (r != 0) out[i + j + 1] += r;
    }
  return out;
}

BettiVector suspension_betti(const BettiVector& a) {
  BettiVector two_points{{0, 1}};
  return join_betti(a, two_points);
}

BettiVector wedge_betti(const std::vector<BettiVector>& parts) {
  BettiVector out;
  for (const auto& p : parts)
    for (const auto& [d, r] : p) {
      if (d < 0) throw DomainError("wedge of an empty space is undefined");
      if (r != 0) out[d] += r;
    }
  return out;
}

BettiVector sphere_betti(long long count, int dim) {
  if (count < 0) throw DomainError("negative sphere count");
  if (count == 0) return {};
  if (dim < -1) throw DomainError("sphere dimension below -1");
  if (dim == -1 && count != 1) throw DomainError("only one (-1)-sphere exists");
  return {{dim, count}};
}

bool betti_equal(const BettiVector& a, const BettiVector& b) {
  for (const auto& [d, r] : a)
    if (r != 0 && (b.count(d) == 0 || b.at(d) != r)) return false;
  for (const auto& [d, r] : b)
    if (r != 0 && (a.count(d) == 0 || a.at(d) != r)) return false;
  return true;
}

std::string betti_to_string(const BettiVector& b) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, r] : b) {
    if (r == 0) continue;
    if (!first) os << ", ";
    os << "H~" << d << "=" << r;
    first = false;
  }
  os << '}';
  return first ? std::string("{trivial}") : os.str();
}

}  // namespace grptopo
