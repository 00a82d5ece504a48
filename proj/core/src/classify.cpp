#include "grptopo/classify.hpp"

#include <algorithm>

#include "grptopo/bounds.hpp"
#include "grptopo/errors.hpp"
#include "grptopo/group_posets.hpp"
#include "grptopo/predictions.hpp"
#include "grptopo/semidirect.hpp"

namespace grptopo {

std::string pi1_status_name(Pi1Status s) {
  switch (s) {
    case Pi1Status::CertifiedTrivial: return "certified-trivial";
    case Pi1Status::CertifiedNontrivial: return "certified-nontrivial";
    case Pi1Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(long long n) {
  if (n < 2) return false;
  long long p = n;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  while (n % p == 0) n /= p;
  return n == 1;
}

bool cyclic_prime_power(const SubgroupLattice& lat) {
  return lat.is_cyclic(lat.full_id()) && is_prime_power(lat.group().order());
}

bool two_generated(const SubgroupLattice& lat) {
  const Group& g = lat.group();
  const int n = int(g.order());
  if (lat.is_cyclic(lat.full_id())) return true;
  // <x,y> = G iff no maximal subgroup contains both.
  const auto& maxima = lat.maximal_ids();
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool inside = false;
      for (int m : maxima)
        if (lat.sub(m).mask.test(x) && lat.sub(m).mask.test(y)) {
          inside = true;
          break;
        }
      if (!inside) return true;
    }
  return false;
}

/// Internal direct-product decompositions (N, M), both normal, N∩M = 1,
/// |N||M| = |G|.
std::vector<std::pair<int, int>> direct_decompositions(const SubgroupLattice& lat) {
  std::vector<std::pair<int, int>> out;
  const auto& normals = lat.normal_ids();
  for (size_t a = 0; a < normals.size(); ++a)
    for (size_t b = a; b < normals.size(); ++b) {
      int n = normals[a], m = normals[b];
      if (lat.sub(n).order <= 1 || lat.sub(m).order <= 1) continue;
      if (lat.sub(n).order * lat.sub(m).order != lat.group().order()) continue;
      if ((lat.sub(n).mask & lat.sub(m).mask).count() != 1) continue;
      out.emplace_back(n, m);
    }
  return out;
}

std::vector<long long> mv_bound_like(const SubgroupLattice& lat) {
  std::vector<long long> out;
  for (const auto& b : mv_rank_bounds(lat)) out.push_back(b.bound);
  return out;
}

/// True when the subgroup has no proper nontrivial subgroup normal in it.
bool subgroup_is_simple(const SubgroupLattice& lat, int id) {
  const Group& g = lat.group();
  const Subgroup& s = lat.sub(id);
  if (s.order == 1) return false;
  for (int i = 0; i < lat.count(); ++i) {
    const Subgroup& cand = lat.sub(i);
    if (cand.order <= 1 || cand.order >= s.order) continue;
    if (!cand.mask.subset_of(s.mask)) continue;
    bool normal_in_s = true;
    for (int w : s.witness) {
      for (int m : cand.members)
        if (!cand.mask.test(g.conj(w, m))) {
          normal_in_s = false;
          break;
        }
      if (!normal_in_s) break;
    }
    if (normal_in_s) return false;
  }
  return true;
}

/// Free rank of pi1(L(G)) from the wedge decomposition over the complements
/// of a normal factor whose quotient lies in F'. Terms at maximal complements
/// K' have empty invariant poset and contribute components(L(G/H)) - 1; all
/// other terms are suspensions of connected joins.
void subgroup_pi1_rank(const SubgroupLattice& lat, ConnectivityClassification& out,
                       long long order_cap) {
  const Group& g = lat.group();
  if (out.in_F) return;
  if (subgroup_is_simple(lat, lat.full_id())) return;
  for (int s : lat.normal_ids()) {
    if (s == lat.trivial_id() || s == lat.full_id()) continue;
    if (is_prime(g.order() / lat.sub(s).order) && subgroup_is_simple(lat, s) &&
        !complements(lat, s).complements.empty())
      return;  // S ⋊ Z/p with S simple: outside the wedge argument's reach
  }

  for (int h : lat.normal_ids()) {
    if (h == lat.trivial_id() || h == lat.full_id()) continue;
    ComplementSet cs = complements(lat, h);
    if (cs.complements.empty()) continue;
    QuotientGroup q = quotient_group(lat, h);
    const SubgroupLattice& qlat = lattice_of(q.group, order_cap);
    bool qf = false, qfp = false;
    classify_f_family(qlat, &qf, &qfp);
    if (!qfp) continue;
    long long maximal_count = 0;
    for (int k : cs.complements)
      if (lat.above(k).count() == 2) ++maximal_count;
    if (maximal_count == 0) continue;
    long long comps = subgroup_poset(qlat).component_count();
    out.subgroup_pi1_free_rank = maximal_count * (comps - 1);
    out.subgroup_pi1_provenance =
        "wedge over " + std::to_string(maximal_count) + " maximal complement(s) of H" +
        std::to_string(h) + ", quotient subgroup poset has " + std::to_string(comps) +
        " component(s)";
    return;
  }
  out.subgroup_pi1_free_rank = 0;
  out.subgroup_pi1_provenance = "no maximal complement with quotient in F': simply connected";
}

}  // namespace

bool is_simple_group(const SubgroupLattice& lat) {
  return lat.group().order() > 1 && subgroup_is_simple(lat, lat.full_id());
}

void classify_f_family(const SubgroupLattice& lat, bool* in_f, bool* in_f_prime) {
  *in_f = false;
  *in_f_prime = false;
  const Group& g = lat.group();
  if (is_prime(g.order())) {
    *in_f = true;  // A trivial
    return;
  }
  for (int a : lat.normal_ids()) {
    if (!lat.is_elementary_abelian(a)) continue;
    long long idx = g.order() / lat.sub(a).order;
    if (!is_prime(idx)) continue;
    ComplementSet cs = complements(lat, a);
    for (int k : cs.complements) {
      if (invariant_subgroup_ids(lat, a, k, false).empty()) {
        *in_f = true;
        *in_f_prime = lat.sub(a).order > 1;
        if (*in_f_prime) return;
      }
    }
  }
}

ConnectivityClassification classify_connectivity(const Group& g, const ClassifyInputs& in,
                                                 long long order_cap) {
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  ConnectivityClassification out;

  // --- C(G) connectedness ---
  bool cpp = cyclic_prime_power(lat);
  out.coset_connected = !cpp;
  out.coset_connected_provenance =
      cpp ? "disconnected: cyclic of prime-power order" : "connected: not cyclic prime-power";
  {
    int comps = coset_poset(lat).component_count();
    out.coset_connected_verified = (comps == 1) == out.coset_connected;
    if (!out.coset_connected_verified)
      throw DomainError("coset connectivity verdict contradicts component count");
  }

  // --- F / F' membership ---
  classify_f_family(lat, &out.in_F, &out.in_F_prime);

  // --- L(G) connectedness ---
  {
    int comps = lat.count() > 2 ? subgroup_poset(lat).component_count() : 0;
    out.subgroup_connected = comps == 1;
    bool simple = subgroup_is_simple(lat, lat.full_id());
    if (!simple) {
      bool predicted_disconnected = out.in_F_prime;
      if (predicted_disconnected == out.subgroup_connected && comps > 0)
        throw DomainError("subgroup connectedness contradicts the F' criterion");
      out.subgroup_connected_provenance =
          out.in_F_prime ? "disconnected: member of F'"
                         : (comps == 0 ? "empty subgroup poset"
                                       : "connected: non-simple and outside F'");
    } else {
      out.subgroup_connected_provenance = "computed only (simple group)";
    }
  }

  // --- pi1 of C(G): collect certifiers ---
  std::vector<std::string> trivial_certs, nontrivial_certs;
  long long best_bound = 0;

  bool solvable = g.is_solvable();
  if (solvable) {
    SpherePrediction p = predict_coset_spheres(g, order_cap);
    if (p.dimension >= 2)
      trivial_certs.push_back("solvable bouquet in dimension " + std::to_string(p.dimension));
    else if (p.dimension <= 0)
      trivial_certs.push_back("solvable bouquet of 0-spheres (each component a point)");
    else {  // dimension 1; the sphere count is never zero
      nontrivial_certs.push_back("solvable bouquet of " + std::to_string(p.count) + " circles");
      best_bound = std::max(best_bound, p.count);
    }
  }

  if (!two_generated(lat)) trivial_certs.push_back("not a 2-generator group");

  for (auto [n, m] : direct_decompositions(lat)) {
    bool n_cpp = lat.is_cyclic(n) && is_prime_power(lat.sub(n).order);
    bool m_cpp = lat.is_cyclic(m) && is_prime_power(lat.sub(m).order);
    if (!(n_cpp && m_cpp)) {
      trivial_certs.push_back("direct product with a factor not cyclic prime-power");
      break;
    }
  }

  for (int n : lat.normal_ids()) {
    if (n == lat.trivial_id() || n == lat.full_id()) continue;
    ComplementSet cs = complements(lat, n);
    for (int k : cs.complements) {
      long long k_order = lat.sub(k).order;
      bool k_cpp = lat.is_cyclic(k) && is_prime_power(k_order);
      if (!k_cpp) {
        trivial_certs.push_back("split extension with complement not cyclic prime-power");
        break;
      }
      if (!is_k_cyclic(lat, n, k)) {
        trivial_certs.push_back("split extension with non-K-cyclic kernel");
        break;
      }
    }
    if (!trivial_certs.empty()) break;
  }

  // Join route: C(G) ~ C(G/N) * C(G,N); the join of a connected space with a
  // nonempty one is simply connected.
  for (int n : lat.normal_ids()) {
    if (n == lat.trivial_id() || n == lat.full_id()) continue;
    FinitePoset rel = relative_coset_poset(lat, n);
    QuotientGroup q = quotient_group(lat, n);
    const SubgroupLattice& qlat = lattice_of(q.group, order_cap);
    bool quotient_connected = !cyclic_prime_power(qlat);
    if (quotient_connected && rel.size() > 0) {
      trivial_certs.push_back("join with connected quotient complex (N of order " +
                              std::to_string(lat.sub(n).order) + ")");
      break;
    }
    if (rel.size() > 0 && rel.component_count() == 1) {
      trivial_certs.push_back("join with connected relative poset (N of order " +
                              std::to_string(lat.sub(n).order) + ")");
      break;
    }
  }

  if (in.pi1_certificate.has_value() && *in.pi1_certificate)
    trivial_certs.push_back("edge-path triviality certificate");

  for (const auto& b : mv_bound_like(lat)) {
    if (b > 0) {
      nontrivial_certs.push_back("Mayer-Vietoris lower bound " + std::to_string(b));
      best_bound = std::max(best_bound, b);
      break;
    }
  }

  if (in.coset_homology) {
    long long h1 = in.coset_homology->betti_at(1);
    if (h1 > 0) {
      nontrivial_certs.push_back("computed H1 rank " + std::to_string(h1));
      best_bound = std::max(best_bound, h1);
    }
  }

  if (!trivial_certs.empty() && !nontrivial_certs.empty())
    throw DomainError("contradictory pi1 certificates: " + trivial_certs.front() + " vs " +
                      nontrivial_certs.front());
  if (!trivial_certs.empty()) {
    out.coset_pi1 = Pi1Status::CertifiedTrivial;
    out.coset_pi1_provenance = trivial_certs.front();
    if (in.coset_homology && in.coset_homology->betti_at(1) != 0)
      throw DomainError("trivial pi1 certificate contradicts computed H1");
  } else if (!nontrivial_certs.empty()) {
    out.coset_pi1 = Pi1Status::CertifiedNontrivial;
    out.coset_pi1_provenance = nontrivial_certs.front();
    out.coset_h1_lower_bound = best_bound;
  } else {
    out.coset_pi1 = Pi1Status::Inconclusive;
    out.coset_pi1_provenance = "no certifier applies";
  }

  // --- pi1 of L(G) via the wedge decomposition over maximal complements ---
  subgroup_pi1_rank(lat, out, order_cap);
  if (out.subgroup_pi1_free_rank && in.subgroup_homology) {
    if (in.subgroup_homology->betti_at(1) != *out.subgroup_pi1_free_rank)
      throw DomainError("wedge-decomposition rank contradicts computed H1 of L(G)");
  }
  return out;
}

}  // namespace grptopo
