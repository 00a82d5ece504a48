#include "grptopo/mobius.hpp"

#include <numeric>
#include <sstream>

#include "grptopo/errors.hpp"

namespace grptopo {

MobiusTable mobius_table(const SubgroupLattice& lat) {
  const int m = lat.count();
  MobiusTable t;
  t.mu.assign(size_t(m), 0);
  t.mu[size_t(lat.full_id())] = 1;
  // Subgroups are sorted by order, so descending ids walk the lattice top-down.
  for (int h = m - 2; h >= 0; --h) {
    long long acc = 0;
    const Bitset& up = lat.above(h);
    for (int k = up.find_next(h); k >= 0; k = up.find_next(k)) acc += t.mu[size_t(k)];
    t.mu[size_t(h)] = -acc;
  }
  return t;
}

void Rational::reduce() {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational& Rational::operator+=(const Rational& o) {
  long long g = std::gcd(den, o.den);
  long long scale = o.den / g;
  num = num * scale + o.num * (den / g);
  den = den * scale;
  reduce();
  return *this;
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << '/' << den;
  return os.str();
}

Rational prob_zeta(const SubgroupLattice& lat, const MobiusTable& table, long long s) {
  Rational acc{0, 1};
  long long order = lat.group().order();
  for (int h = 0; h < lat.count(); ++h) {
    long long mu = table.at(h);
    if (mu == 0) continue;
    long long index = order / lat.sub(h).order;
    long long powed = 1;
    for (long long i = 0; i < (s < 0 ? -s : s); ++i) powed *= index;
    Rational term = (s <= 0) ? Rational{mu * powed, 1} : Rational{mu, powed};
    term.reduce();
    acc += term;
  }
  return acc;
}

ZetaReport zeta_report(const SubgroupLattice& lat, const std::vector<long long>& s_values,
                       std::optional<long long> chi_reduced) {
  ZetaReport r;
  MobiusTable t = mobius_table(lat);
  for (long long s : s_values) r.values[s] = prob_zeta(lat, t, s);
  Rational p1 = prob_zeta(lat, t, -1);
  if (!p1.is_integer()) throw DomainError("P(G,-1) must be an integer");
  r.p_at_minus_one = p1.num;
  r.chi_reduced = chi_reduced;
  if (chi_reduced) {
    r.identity_checked = true;
    r.identity_holds = (r.p_at_minus_one == -*chi_reduced);
  }
  return r;
}

}  // namespace grptopo
