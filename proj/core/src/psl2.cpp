#include "grptopo/psl2.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "grptopo/errors.hpp"

namespace grptopo {

namespace {

int mod_inv(int a, int p) {
  // p is prime and a != 0 mod p.
  int r = 1, e = p - 2, base = ((a % p) + p) % p;
  while (e) {
    if (e & 1) r = int((long long)r * base % p);
    base = int((long long)base * base % p);
    e >>= 1;
  }
  return r;
}

/// Permutation of {0..p} induced by x -> (ax+b)/(cx+d); point p is infinity.
Permutation mobius_perm(int p, int a, int b, int c, int d) {
  std::vector<int> img(size_t(p + 1));
  for (int x = 0; x < p; ++x) {
    int den = int(((long long)c * x + d) % p);
    if (den == 0) {
      img[size_t(x)] = p;
    } else {
      int num = int(((long long)a * x + b) % p);
      img[size_t(x)] = int((long long)num * mod_inv(den, p) % p);
    }
  }
  img[size_t(p)] = (c == 0) ? p : int((long long)a * mod_inv(c, p) % p);
  return Permutation(img);
}

MobiusTransform canonical_sign(int p, int a, int b, int c, int d) {
  auto norm = [p](int v) { return ((v % p) + p) % p; };
  a = norm(a);
  b = norm(b);
  c = norm(c);
  d = norm(d);
  int first = a ? a : b ? b : c ? c : d;
  if (first > (p - 1) / 2) {
    a = norm(-a);
    b = norm(-b);
    c = norm(-c);
    d = norm(-d);
  }
  return MobiusTransform{a, b, c, d, p};
}

}  // namespace

const Psl2Model& psl2_model(int p) {
  if (p < 3 || p % 2 == 0) throw DomainError("psl2 model needs an odd prime");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw DomainError("psl2 model needs an odd prime");

  static std::mutex mu;
  static std::map<int, std::unique_ptr<Psl2Model>> store;
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(p);
  if (it != store.end()) return *it->second;

  auto model = std::make_unique<Psl2Model>();
  model->p = p;
  // x -> x+1 and x -> -1/x generate PSL2(F_p).
  Permutation t = mobius_perm(p, 1, 1, 0, 1);
  Permutation s = mobius_perm(p, 0, -1 + p, 1, 0);
  model->group = Group::from_generators(p + 1, {t, s}, "psl2:" + std::to_string(p));
  long long expected = (long long)p * (p - 1) * (p + 1) / 2;
  if (model->group.order() != expected)
    throw DomainError("psl2 enumeration produced wrong order");

  // Label every element by sweeping SL2(F_p) and canonicalizing the sign.
  model->labels.assign(size_t(model->group.order()), MobiusTransform{});
  std::vector<char> seen(size_t(model->group.order()), 0);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
      for (int d = 0; d < p; ++d) {
        if ((((long long)a * d - (long long)b * c) % p + p) % p != 1) continue;
        int idx = model->group.index_of(mobius_perm(p, a, b, c, d));
        if (idx < 0) throw DomainError("SL2 sweep produced a non-element");
        if (!seen[size_t(idx)]) {
          seen[size_t(idx)] = 1;
          model->labels[size_t(idx)] = canonical_sign(p, a, b, c, d);
        }
      }
  for (char f : seen)
    if (!f) throw DomainError("SL2 sweep missed an element");

  it = store.emplace(p, std::move(model)).first;
  return *it->second;
}

long long order_from_trace(int p, int trace_squared) {
  if (p != 7) throw DomainError("order_from_trace is specified for p = 7 only");
  switch (trace_squared) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 4: return 7;
    default:
      throw DomainError("tr^2 = " + std::to_string(trace_squared) +
                        " is impossible for a non-identity element of PSL2(F_7)");
  }
}

Group pgl2_conjugation_action(const Psl2Model& model) {
  const Group& g = model.group;
  const int n = int(g.order());
  const int p = model.p;

  // Conjugation by an element of PGL2 as a permutation of element indices.
  auto conj_by_point_perm = [&](const Permutation& m) {
    Permutation minv = m.inverse();
    std::vector<int> img((size_t)n);
    for (int e = 0; e < n; ++e) {
      Permutation conj = m * g.perm(e) * minv;
      int idx = g.index_of(conj);
      if (idx < 0) throw DomainError("conjugation left PSL2");
      img[size_t(e)] = idx;
    }
    return Permutation(img);
  };

  std::vector<Permutation> gens;
  for (int e : g.generator_indices()) gens.push_back(conj_by_point_perm(g.perm(e)));
  // Outer part: conjugation by diag(nu, 1) with nu a quadratic non-residue.
  int nu = -1;
  for (int v = 2; v < p; ++v) {
    bool residue = false;
    for (int x = 1; x < p && !residue; ++x)
      if ((long long)x * x % p == v) residue = true;
    if (!residue) {
      nu = v;
      break;
    }
  }
  gens.push_back(conj_by_point_perm(mobius_perm(p, nu, 0, 0, 1)));

  Group aut = Group::from_generators(n, gens, "pgl2:" + std::to_string(p));
  if (aut.order() != (long long)p * (p - 1) * (p + 1))
    throw DomainError("PGL2 conjugation action has wrong order");
  return aut;
}

}  // namespace grptopo
