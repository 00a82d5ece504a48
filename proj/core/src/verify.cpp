#include "grptopo/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "grptopo/action.hpp"
#include "grptopo/atomized.hpp"
#include "grptopo/betti.hpp"
#include "grptopo/bounds.hpp"
#include "grptopo/catalog.hpp"
#include "grptopo/classify.hpp"
#include "grptopo/covers.hpp"
#include "grptopo/errors.hpp"
#include "grptopo/group_posets.hpp"
#include "grptopo/pi1.hpp"
#include "grptopo/psl2.hpp"
#include "grptopo/semidirect.hpp"

namespace grptopo {

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

CheckResult check(std::string id, bool pass, std::string detail) {
  return CheckResult{std::move(id), pass, std::move(detail)};
}

void append(std::vector<CheckResult>& into, std::vector<CheckResult> more) {
  for (auto& c : more) into.push_back(std::move(c));
}

std::string betti_pair(const BettiVector& got, const BettiVector& want) {
  return "computed " + betti_to_string(got) + ", expected " + betti_to_string(want);
}

}  // namespace

const GroupFacts& group_facts(const std::string& spec, long long order_cap) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<GroupFacts>> store;
  std::lock_guard<std::mutex> lock(mu);
  auto it = store.find(spec);
  if (it != store.end()) return *it->second;

  auto f = std::make_unique<GroupFacts>();
  f->spec = spec;
  f->display = spec;
  for (const auto& e : builtin_catalog())
    if (e.spec == spec) {
      f->display = e.display;
      f->full_complex = e.full_complex;
    }
  f->group = catalog_group(spec);
  const SubgroupLattice& lat = lattice_of(f->group, order_cap);
  f->subgroup_count = lat.count();
  f->normal_count = int(lat.normal_ids().size());
  f->maximal_count = int(lat.maximal_ids().size());
  f->proper_coset_count = (long long)lat.proper_cosets().size();
  f->solvable = f->group.is_solvable();
  f->simple = is_simple_group(lat);

  if (f->solvable) {
    f->coset_prediction = predict_coset_spheres(f->group, order_cap);
    if (f->group.order() > 1)
      f->subgroup_prediction = predict_subgroup_spheres(f->group, order_cap);
  }

  if (f->full_complex) {
    auto coset_k = order_complex(coset_poset(lat));
    f->coset_chi_reduced = euler_characteristics(coset_k).second;
    f->coset_homology = reduced_homology(coset_k);
    f->subgroup_homology = reduced_homology(order_complex(subgroup_poset(lat)));
    f->punctured_homology =
        reduced_homology(order_complex(punctured_coset_poset(lat, f->group.identity())));
    f->zeta = zeta_report(lat, {-1, 1, 2}, f->coset_chi_reduced);
  }

  it = store.emplace(spec, std::move(f)).first;
  return *it->second;
}

namespace {

// ---------------------------------------------------------------- solvable

std::vector<CheckResult> suite_solvable(long long cap) {
  std::vector<CheckResult> out;
  for (const auto& e : builtin_catalog()) {
    const GroupFacts& f = group_facts(e.spec, cap);
    if (!f.solvable || !f.full_complex) continue;
    {
      BettiVector got = betti_of(*f.coset_homology);
      BettiVector want = f.coset_prediction->expected_betti();
      bool ok = betti_equal(got, want) && f.coset_homology->torsion_free();
      out.push_back(check("solvable/coset/" + f.display, ok,
                          betti_pair(got, want) + (f.coset_homology->torsion_free()
                                                       ? ""
                                                       : "; unexpected torsion")));
    }
    {
      BettiVector got = betti_of(*f.subgroup_homology);
      BettiVector want = f.subgroup_prediction->expected_betti();
      bool ok = betti_equal(got, want) && f.subgroup_homology->torsion_free();
      out.push_back(check("solvable/subgroup/" + f.display, ok,
                          f.subgroup_prediction->contractible
                              ? "contractible; " + betti_pair(got, want)
                              : betti_pair(got, want)));
    }
  }

  // Frozen counts for the named instances.
  auto pinned = [&](const std::string& spec, long long count, int dim) {
    const GroupFacts& f = group_facts(spec, cap);
    bool ok = f.coset_prediction && f.coset_prediction->count == count &&
              f.coset_prediction->dimension == dim;
    out.push_back(check("solvable/pinned/" + f.display, ok,
                        "prediction " + f.coset_prediction->to_string() + ", expected " +
                            std::to_string(count) + " of dim " + std::to_string(dim)));
  };
  pinned("sym:3", 8, 1);
  pinned("alt:4", 30, 1);
  pinned("product:sym:3,cyclic:5", 32, 2);
  return out;
}

// ------------------------------------------------------------------ bounds

std::vector<CheckResult> suite_bounds(long long cap) {
  std::vector<CheckResult> out;
  for (const auto& e : builtin_catalog()) {
    const GroupFacts& f = group_facts(e.spec, cap);
    if (!f.full_complex) continue;
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    BoundsReport br = check_mv_bounds(lat, *f.coset_homology);
    long long strongest = 0;
    for (const auto& b : br.instances) strongest = std::max(strongest, b.bound);
    out.push_back(check("bounds/" + f.display, br.all_satisfied,
                        std::to_string(br.instances.size()) + " instance(s), strongest " +
                            std::to_string(strongest) + " <= H1 rank " +
                            std::to_string(br.h1_rank)));
  }
  {  // pinned instances
    const GroupFacts& a4 = group_facts("alt:4", cap);
    BoundsReport br = check_mv_bounds(lattice_of(a4.group, cap), *a4.coset_homology);
    bool has8 = false;
    for (const auto& b : br.instances) has8 = has8 || b.bound == 8;
    out.push_back(check("bounds/pinned/A4", has8 && br.h1_rank == 30,
                        "bound 8 present, H1 rank " + std::to_string(br.h1_rank)));
    const GroupFacts& v4 = group_facts("elem:2^2", cap);
    BoundsReport br2 = check_mv_bounds(lattice_of(v4.group, cap), *v4.coset_homology);
    bool has2 = false;
    for (const auto& b : br2.instances)
      has2 = has2 || (b.kind == BoundInstance::Kind::SubgroupComponents && b.bound == 2);
    out.push_back(check("bounds/pinned/Z2xZ2", has2 && br2.h1_rank == 3,
                        "component bound 2 present, H1 rank " + std::to_string(br2.h1_rank)));
  }
  return out;
}

// ------------------------------------------------------------------ covers

std::vector<int> subgroups_of_order(const SubgroupLattice& lat, long long order) {
  std::vector<int> ids;
  for (int i = 0; i < lat.count(); ++i)
    if (lat.sub(i).order == order) ids.push_back(i);
  return ids;
}

std::vector<CheckResult> suite_covers(long long cap) {
  std::vector<CheckResult> out;
  {
    const GroupFacts& f = group_facts("alt:5", cap);
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    std::vector<int> ids = subgroups_of_order(lat, 12);
    std::vector<int> d10 = subgroups_of_order(lat, 10);
    ids.insert(ids.end(), d10.begin(), d10.end());
    CoverCheck cc = cover_check(lat, ids, 2);
    out.push_back(check("covers/A5/A4+D10", cc.pass(),
                        std::to_string(ids.size()) + " members, 2-regular 2-transitive"));
    CoverCheck neg = cover_check(lat, subgroups_of_order(lat, 12), 2);
    out.push_back(check("covers/A5/A4-only-fails", !neg.covers,
                        std::to_string(neg.uncovered.size()) + " uncovered element(s)"));
  }
  {
    const GroupFacts& f = group_facts("psl2:7", cap);
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    CoverCheck cc = cover_check(lat, lat.maximal_ids(), 2);
    out.push_back(check("covers/PSL(2,7)/maximals", cc.pass(),
                        std::to_string(lat.maximal_ids().size()) +
                            " maximal subgroups, 2-regular 2-transitive"));
  }
  return out;
}

// --------------------------------------------------------------------- pi1

/// H1 of the minimal-cover 2-skeleton, computed from the edge oracle. The
/// rank of the cycle lattice is |E| - |V| + 1 (the skeleton is connected for
/// the groups checked here), so an early-stopped unimodular elimination of
/// that rank certifies H1 = 0.
bool m_skeleton_h1_trivial(const EdgePresentation& p, std::string* detail) {
  const int n = p.vertices();
  SimplicialComplex k;
  k.vertex_count = n;
  k.truncation_dim = 2;
  k.faces.resize(3);
  for (int v = 0; v < n; ++v) k.faces[0].push_back({v});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (p.edge(u, v)) k.faces[1].push_back({u, v});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (p.triangle(u, v, w)) k.faces[2].push_back({u, v, w});

  ChainComplex cc = chain_complex(k);
  long long z1 = (long long)k.faces[1].size() - n + 1;
  SmithOptions so;
  so.early_stop_unimodular_rank = z1;
  SNFResult r = smith_normal_form(cc.boundary[2], so);
  std::ostringstream os;
  os << k.faces[1].size() << " edges, " << k.faces[2].size() << " triangles, rank d2 = "
     << r.rank;
  *detail = os.str();
  if (r.early_stopped) return true;  // saturated unimodular sublattice of full rank
  return r.rank == z1 && r.nontrivial_divisors().empty();
}

std::vector<CheckResult> suite_pi1(long long cap) {
  std::vector<CheckResult> out;
  for (const char* spec : {"alt:5", "sym:4", "psl2:7"}) {
    const GroupFacts& f = group_facts(spec, cap);
    EdgePresentation p = EdgePresentation::standard(f.group, cap);
    PropagationResult r = propagate_triviality(p);
    out.push_back(check("pi1/certificate/" + f.display, r.complete,
                        std::to_string(r.trivial_count) + "/" + std::to_string(r.edge_count) +
                            " edge generators trivial"));
    if (r.complete) {
      bool replay = replay_certificate(p, *r.certificate);
      TrivialityCertificate reparsed =
          TrivialityCertificate::parse(r.certificate->serialize());
      bool replay2 = replay_certificate(p, reparsed);
      out.push_back(check("pi1/replay/" + f.display, replay && replay2,
                          std::to_string(r.certificate->steps.size()) +
                              " derivation steps, serialized round-trip"));
      std::string detail;
      bool h1 = m_skeleton_h1_trivial(p, &detail);
      out.push_back(check("pi1/H1(M)/" + f.display, h1, detail));
    }
    if (f.coset_homology) {
      out.push_back(check("pi1/H1(coset)/" + f.display,
                          f.coset_homology->betti_at(1) == 0,
                          "H1 rank " + std::to_string(f.coset_homology->betti_at(1))));
    }
  }

  {  // negative control: A4 must stay inconclusive, with nonzero H1
    const GroupFacts& f = group_facts("alt:4", cap);
    PropagationResult r = propagate_triviality(EdgePresentation::standard(f.group, cap));
    out.push_back(check("pi1/negative/A4", !r.complete && f.coset_homology->betti_at(1) == 30,
                        std::to_string(r.trivial_count) + "/" + std::to_string(r.edge_count) +
                            " trivial; H1 rank " +
                            std::to_string(f.coset_homology->betti_at(1))));
  }

  {  // n-local checks and the covers pipeline
    NLocalResult a5 = n_local_check(group_facts("alt:5", cap).group, 2, cap);
    NLocalResult p7 = n_local_check(group_facts("psl2:7", cap).group, 2, cap);
    out.push_back(check("pi1/2-local/A5+PSL(2,7)", a5.pass && p7.pass,
                        "order-2 incident edges all trivial"));
    NLocalResult z6 = n_local_check(group_facts("cyclic:6", cap).group, 2, cap);
    out.push_back(check("pi1/2-local/Z6-fails", !z6.pass,
                        std::to_string(z6.residual_sample.size()) + " residual edge(s)"));

    const SubgroupLattice& lat5 = lattice_of(group_facts("alt:5", cap).group, cap);
    std::vector<int> ids = subgroups_of_order(lat5, 12);
    auto d10 = subgroups_of_order(lat5, 10);
    ids.insert(ids.end(), d10.begin(), d10.end());
    bool cover5 = cover_check(lat5, ids, 2).pass();
    const SubgroupLattice& lat7 = lattice_of(group_facts("psl2:7", cap).group, cap);
    bool cover7 = cover_check(lat7, lat7.maximal_ids(), 2).pass();
    bool cert5 =
        propagate_triviality(EdgePresentation::standard(group_facts("alt:5", cap).group, cap))
            .complete;
    bool cert7 =
        propagate_triviality(EdgePresentation::standard(group_facts("psl2:7", cap).group, cap))
            .complete;
    out.push_back(check("pi1/covers-pipeline", (!(cover5 && a5.pass) || cert5) &&
                                                   (!(cover7 && p7.pass) || cert7),
                        "cover + n-local pass implies a full certificate"));
  }

  {  // condition (2)
    Condition2Result a5 = condition2_search(group_facts("alt:5", cap).group, cap);
    out.push_back(check("pi1/condition2/A5", a5.pass,
                        std::to_string(a5.generating_pairs) + " generating pairs witnessed"));
    Condition2Result s33 = condition2_search(group_facts("product:sym:3,sym:3", cap).group, cap);
    out.push_back(check("pi1/condition2/S3xS3", s33.pass,
                        std::to_string(s33.generating_pairs) + " generating pairs witnessed"));
    bool rejected = false;
    try {
      condition2_search(group_facts("cyclic:6", cap).group, cap);
    } catch (const DomainError&) {
      rejected = true;
    }
    out.push_back(check("pi1/condition2/Z6-rejected", rejected, "cyclic input rejected"));
  }
  return out;
}

// -------------------------------------------------------------------- zeta

std::vector<CheckResult> suite_zeta(long long cap) {
  std::vector<CheckResult> out;
  for (const auto& e : builtin_catalog()) {
    const GroupFacts& f = group_facts(e.spec, cap);
    if (!f.full_complex || f.group.order() > 120) continue;
    out.push_back(check("zeta/" + f.display, f.zeta->identity_holds,
                        "P(G,-1) = " + std::to_string(f.zeta->p_at_minus_one) +
                            ", -chi~ = " + std::to_string(-*f.coset_chi_reduced)));
  }
  {
    const GroupFacts& f = group_facts("psl2:7", cap);
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    ZetaReport zr = zeta_report(lat, {-1}, std::nullopt);
    out.push_back(check("zeta/PSL(2,7)-value", zr.p_at_minus_one == -2856,
                        "P(G,-1) = " + std::to_string(zr.p_at_minus_one) +
                            " (Mobius table only)"));
  }
  return out;
}

// -------------------------------------------------------------- inequality

std::vector<CheckResult> suite_inequality(long long cap) {
  std::vector<CheckResult> out;
  for (const auto& e : builtin_catalog()) {
    const GroupFacts& f = group_facts(e.spec, cap);
    if (!f.full_complex) continue;
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    auto rows = hom_inequality_report(lat, *f.subgroup_homology, *f.coset_homology,
                                      *f.punctured_homology, 2);
    bool ok = true;
    std::ostringstream os;
    for (const auto& r : rows) {
      ok = ok && r.holds;
      os << "n=" << r.n << ": " << r.rank_subgroup << " <= " << r.rank_coset_next
         << (r.surjection_applies ? " (surjective)" : "") << "; ";
    }
    out.push_back(check("inequality/" + f.display, ok, os.str()));
  }
  {  // closure under coprime products, on the (S3, Z5) instance
    const GroupFacts& s3 = group_facts("sym:3", cap);
    const GroupFacts& z5 = group_facts("cyclic:5", cap);
    const GroupFacts& prod = group_facts("product:sym:3,cyclic:5", cap);
    bool coprime = is_coprime(s3.group, z5.group, cap);
    auto holds = [&](const GroupFacts& f) {
      for (int n = 0; n <= 2; ++n)
        if (f.subgroup_homology->betti_at(n) > f.coset_homology->betti_at(n + 1)) return false;
      return true;
    };
    bool ok = coprime && holds(s3) && holds(z5) && holds(prod);
    out.push_back(check("inequality/coprime-closure/S3xZ5", ok,
                        "factors and product all satisfy rank H~n(L) <= rank H~(n+1)(C)"));
  }
  return out;
}

// ------------------------------------------------------------------- joins

BettiVector coset_betti_of_group(const Group& g, long long cap) {
  const SubgroupLattice& lat = lattice_of(g, cap);
  return betti_of(reduced_homology(order_complex(coset_poset(lat))));
}

std::vector<CheckResult> suite_joins(long long cap) {
  std::vector<CheckResult> out;

  auto general_extension = [&](const std::string& spec, long long normal_order) {
    const GroupFacts& f = group_facts(spec, cap);
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    int nid = -1;
    for (int n : lat.normal_ids())
      if (lat.sub(n).order == normal_order) {
        nid = n;
        break;
      }
    QuotientGroup q = quotient_group(lat, nid);
    BettiVector quot = coset_betti_of_group(q.group, cap);
    BettiVector rel = betti_of(reduced_homology(order_complex(relative_coset_poset(lat, nid))));
    BettiVector joined = join_betti(quot, rel);
    BettiVector whole = betti_of(*f.coset_homology);
    out.push_back(check("joins/extension/" + f.display, betti_equal(joined, whole),
                        betti_pair(whole, joined)));
  };
  general_extension("sym:3", 3);
  general_extension("alt:4", 4);

  {  // coprime direct product: C(H x K) vs C(H) * C(K)
    const GroupFacts& prod = group_facts("product:sym:3,cyclic:5", cap);
    BettiVector joined = join_betti(betti_of(*group_facts("sym:3", cap).coset_homology),
                                    betti_of(*group_facts("cyclic:5", cap).coset_homology));
    out.push_back(check("joins/coprime-product/S3xZ5",
                        betti_equal(betti_of(*prod.coset_homology), joined),
                        betti_pair(betti_of(*prod.coset_homology), joined)));
  }

  {  // non-coprime first claim: C0(H x K) vs C(H) * C(K) on Z2 x Z2
    const GroupFacts& f = group_facts("elem:2^2", cap);
    auto sd = find_semidirect_structure(f.group, cap);
    SemidirectPosets sp = semidirect_posets(*sd, cap);
    BettiVector c0 = betti_of(reduced_homology(order_complex(sp.nonsaturating)));
    BettiVector z2 = betti_of(*group_facts("cyclic:2", cap).coset_homology);
    BettiVector joined = join_betti(z2, z2);
    out.push_back(check("joins/nonsaturating/Z2xZ2", betti_equal(c0, joined),
                        betti_pair(c0, joined)));
  }

  {  // semidirect decomposition on S3: C0 vs C_K(H) * C(K)
    const GroupFacts& f = group_facts("sym:3", cap);
    auto sd = find_semidirect_structure(f.group, cap);
    SemidirectPosets sp = semidirect_posets(*sd, cap);
    BettiVector c0 = betti_of(reduced_homology(order_complex(sp.nonsaturating)));
    BettiVector ck = betti_of(reduced_homology(order_complex(sp.invariant_cosets)));
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    BettiVector kk = coset_betti_of_group(subgroup_as_group(lat, sd->complement_id), cap);
    BettiVector joined = join_betti(ck, kk);
    out.push_back(
        check("joins/semidirect/S3", betti_equal(c0, joined), betti_pair(c0, joined)));
  }

  {  // (A5, Z2): prediction only, cross-checked against the Mobius table
    const GroupFacts& a5 = group_facts("alt:5", cap);
    const GroupFacts& z2 = group_facts("cyclic:2", cap);
    bool coprime = is_coprime(a5.group, z2.group, cap);
    BettiVector joined =
        join_betti(betti_of(*a5.coset_homology), betti_of(*z2.coset_homology));
    long long chi_pred = 0;
    for (const auto& [d, r] : joined) chi_pred += (d % 2 || d < 0 ? -1 : 1) * r;
    const GroupFacts& prod = group_facts("product:alt:5,cyclic:2", cap);
    const SubgroupLattice& lat = lattice_of(prod.group, cap);
    ZetaReport zr = zeta_report(lat, {-1}, std::nullopt);
    bool ok = coprime && betti_equal(joined, BettiVector{{3, 1560}}) &&
              zr.p_at_minus_one == -chi_pred;
    out.push_back(check("joins/coprime-product/A5xZ2", ok,
                        "verified: theorem-only; predicted " + betti_to_string(joined) +
                            ", P(G,-1) = " + std::to_string(zr.p_at_minus_one) +
                            " matches predicted -chi~"));
  }

  {  // subgroup posets of a coprime product: L(H x K) vs Susp(L(H) * L(K))
    const GroupFacts& prod = group_facts("product:sym:3,cyclic:5", cap);
    BettiVector lhs = betti_of(*prod.subgroup_homology);
    BettiVector l_s3 = betti_of(*group_facts("sym:3", cap).subgroup_homology);
    BettiVector l_z5 = betti_of(*group_facts("cyclic:5", cap).subgroup_homology);
    BettiVector rhs = suspension_betti(join_betti(l_s3, l_z5));
    out.push_back(check("joins/coprime-subgroup/S3xZ5", betti_equal(lhs, rhs),
                        betti_pair(lhs, rhs)));
  }
  return out;
}

// ------------------------------------------------------------ psl2 details

std::vector<CheckResult> suite_psl(long long cap) {
  std::vector<CheckResult> out;
  const Psl2Model& model = psl2_model(7);
  const Group& g = model.group;

  {  // trace table vs element orders, all 167 non-identity elements
    long long mismatches = 0;
    for (int e = 1; e < int(g.order()); ++e) {
      long long from_trace = order_from_trace(7, model.labels[size_t(e)].trace_squared());
      if (from_trace != g.element_order(e)) ++mismatches;
    }
    out.push_back(check("psl/trace-orders", mismatches == 0,
                        "167 non-identity elements, " + std::to_string(mismatches) +
                            " mismatch(es)"));
  }

  {  // automorphism classes of generating pairs
    Group aut = pgl2_conjugation_action(model);
    PermAction act;
    act.acting = aut;
    act.points = int(g.order());
    for (int e = 0; e < int(aut.order()); ++e) act.table.push_back(aut.perm(e).images());
    auto phi23 = generating_pair_classes(g, act, 2, 3);
    auto phi24 = generating_pair_classes(g, act, 2, 4);
    auto phi27 = generating_pair_classes(g, act, 2, 7);
    bool ok = phi23.class_count == 1 && phi24.class_count == 1 && phi27.class_count == 3;
    out.push_back(check("psl/generating-pair-classes", ok,
                        "Phi(2,3) = " + std::to_string(phi23.class_count) + ", Phi(2,4) = " +
                            std::to_string(phi24.class_count) + ", Phi(2,7) = " +
                            std::to_string(phi27.class_count)));
    out.push_back(check("psl/aut-order", aut.order() == 336,
                        "conjugation action group has order " + std::to_string(aut.order())));
  }

  {  // maximal subgroup orders
    const SubgroupLattice& lat = lattice_of(g, cap);
    std::set<long long> orders;
    for (int m : lat.maximal_ids()) orders.insert(lat.sub(m).order);
    bool ok = orders == std::set<long long>{21, 24};
    std::ostringstream os;
    for (long long o : orders) os << o << ' ';
    out.push_back(check("psl/maximal-orders", ok, "orders { " + os.str() + "}"));
  }

  {  // |PSL2(p)| for the supported primes
    bool ok = true;
    for (int p : {3, 5, 7, 11, 13}) {
      long long expect = (long long)p * (p - 1) * (p + 1) / 2;
      if (psl2_model(p).group.order() != expect) ok = false;
    }
    out.push_back(check("psl/orders", ok, "p in {3,5,7,11,13}: order = p(p-1)(p+1)/2"));
  }

  {  // closed-form Euler characteristic values
    EulerPslValue v13 = euler_psl_formula(13);
    EulerPslValue v3 = euler_psl_formula(3);
    bool rejected7 = false;
    try {
      euler_psl_formula(7);
    } catch (const DomainError&) {
      rejected7 = true;
    }
    out.push_back(check("psl/euler-closed-form",
                        v13.chi == 180181 && v3.degenerate && rejected7,
                        "chi(13) = " + std::to_string(v13.chi) +
                            ", p = 3 degenerate, p = 7 rejected"));
  }
  return out;
}

// -------------------------------------------------------------- properties

std::vector<CheckResult> suite_properties(long long cap) {
  std::vector<CheckResult> out;

  {  // Betti preservation under both homotopy reductions
    bool quillen_ok = true, maxint_ok = true;
    std::string q_fail, m_fail;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      if (!f.full_complex) continue;
      const SubgroupLattice& lat = lattice_of(f.group, cap);
      FinitePoset cp = coset_poset(lat);
      BettiVector full = betti_of(*f.coset_homology);
      BettiVector red = betti_of(reduced_homology(order_complex(quillen_reduce(cp))));
      if (!betti_equal(full, red)) {
        quillen_ok = false;
        q_fail = f.display;
      }
      BettiVector mired = betti_of(
          reduced_homology(order_complex(reduce_to_maximal_intersections(lat, cp))));
      if (!betti_equal(full, mired)) {
        maxint_ok = false;
        m_fail = f.display;
      }
    }
    out.push_back(check("properties/quillen-preserves-betti", quillen_ok,
                        quillen_ok ? "all full-complex catalog groups" : "fails on " + q_fail));
    out.push_back(check("properties/max-intersections-preserves-betti", maxint_ok,
                        maxint_ok ? "all full-complex catalog groups" : "fails on " + m_fail));
  }

  {  // A5: both reductions drop the same coset family
    const SubgroupLattice& lat = lattice_of(group_facts("alt:5", cap).group, cap);
    FinitePoset cp = coset_poset(lat);
    FinitePoset q = quillen_reduce(cp);
    FinitePoset m = reduce_to_maximal_intersections(lat, cp);
    std::set<std::string> ql(q.labels().begin(), q.labels().end());
    std::set<std::string> ml(m.labels().begin(), m.labels().end());
    out.push_back(check("properties/A5-reduction-sets-match", ql == ml,
                        std::to_string(q.size()) + " vs " + std::to_string(m.size()) +
                            " surviving cosets"));
  }

  {  // minimal cover vs order complex (atomized posets)
    bool ok = true;
    std::string fail;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      if (!f.full_complex || f.group.order() > 24) continue;
      const SubgroupLattice& lat = lattice_of(f.group, cap);
      for (bool use_subgroups : {false, true}) {
        FinitePoset p = use_subgroups ? subgroup_poset(lat) : coset_poset(lat);
        AtomizeResult ar = atomize(p);
        if (!ar.atomized()) {
          ok = false;
          fail = f.display + " not atomized";
          continue;
        }
        BettiVector mc = betti_of(reduced_homology(minimal_cover(*ar.view)));
        BettiVector oc = betti_of(reduced_homology(order_complex(p)));
        if (!betti_equal(mc, oc)) {
          ok = false;
          fail = f.display + (use_subgroups ? " L" : " C");
        }
      }
    }
    out.push_back(check("properties/min-cover-betti", ok,
                        ok ? "order <= 24 catalog posets, both families" : "fails on " + fail));

    // A5 through the truncated skeleton: reliable dimensions must agree.
    const GroupFacts& a5 = group_facts("alt:5", cap);
    const SubgroupLattice& lat5 = lattice_of(a5.group, cap);
    AtomizeResult ar = atomize(coset_poset(lat5));
    MinimalCoverOptions opts;
    opts.max_dim = 3;
    HomologySummary mh = reduced_homology(minimal_cover(*ar.view, opts));
    bool a5ok = ar.atomized() && mh.reliable_dim >= 2;
    for (int d = 0; d <= std::min(2, mh.reliable_dim) && a5ok; ++d)
      a5ok = mh.betti_at(d) == a5.coset_homology->betti_at(d);
    out.push_back(check("properties/min-cover-betti/A5-skeleton", a5ok,
                        "dims 0..2 agree through the 3-skeleton (truncation recorded)"));
  }

  {  // component count == H~0 + 1
    bool ok = true;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      if (!f.full_complex) continue;
      const SubgroupLattice& lat = lattice_of(f.group, cap);
      if (coset_poset(lat).component_count() != f.coset_homology->betti_at(0) + 1) ok = false;
      FinitePoset L = subgroup_poset(lat);
      if (L.size() > 0 && L.component_count() != f.subgroup_homology->betti_at(0) + 1)
        ok = false;
    }
    out.push_back(check("properties/components-vs-H0", ok, "coset and subgroup posets"));
  }

  {  // puncture invariance: C(G)_g isomorphic to C(G)_1 by left translation
    const GroupFacts& f = group_facts("sym:3", cap);
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    bool ok = true;
    FinitePoset base = punctured_coset_poset(lat, f.group.identity());
    for (int g = 1; g < int(f.group.order()); ++g) {
      FinitePoset other = punctured_coset_poset(lat, g);
      if (other.size() != base.size() || other.component_count() != base.component_count())
        ok = false;
      if (betti_of(reduced_homology(order_complex(other))) !=
          betti_of(reduced_homology(order_complex(base))))
        ok = false;
    }
    out.push_back(check("properties/puncture-invariance", ok,
                        "all punctures of C(S3) share the topology of C(S3)_1"));
  }

  {  // coset census: sum of indices over proper subgroups
    bool ok = true;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      const SubgroupLattice& lat = lattice_of(f.group, cap);
      long long total = 0;
      for (int i = 0; i < lat.count() - 1; ++i)
        total += f.group.order() / lat.sub(i).order;
      if (total != f.proper_coset_count) ok = false;
    }
    out.push_back(check("properties/coset-census", ok,
                        "sum of (G:H) over proper H matches the coset table"));
  }

  {  // chief factors of solvable groups are prime powers
    bool ok = true;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      if (!f.solvable) continue;
      ChiefSeriesData cs = chief_series(f.group, cap);
      for (long long fo : cs.factor_orders) {
        long long p = fo;
        for (long long d = 2; d * d <= fo; ++d)
          if (fo % d == 0) {
            p = d;
            break;
          }
        while (fo % p == 0) fo /= p;
        if (fo != 1) ok = false;
      }
    }
    out.push_back(check("properties/chief-factors-prime-power", ok, "solvable catalog"));
  }

  {  // atom-generation bound at homology level
    bool ok = true;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      if (!f.full_complex) continue;
      const SubgroupLattice& lat = lattice_of(f.group, cap);
      AtomizeResult ar = atomize(coset_poset(lat));
      if (!ar.atomized()) {
        ok = false;
        continue;
      }
      for (int k = 2; k <= 3; ++k) {
        // The bound needs k <= |atoms|: only then does a generating subset
        // extend to a generating k-subset, making the hypothesis monotone.
        if (k > int(ar.view->atoms().size())) continue;
        if (!no_k_atoms_generate(*ar.view, k)) continue;
        for (int i = 0; i <= k - 2; ++i)
          if (f.coset_homology->betti_at(i) != 0) ok = false;
      }
    }
    out.push_back(check("properties/atom-generation-vanishing", ok,
                        "no k atoms generate => reduced homology vanishes below k-1"));
  }

  {  // wedge decomposition of L(G) over the complements of a minimal normal
    bool ok = true;
    std::string fail;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      if (!f.full_complex || f.simple || f.group.order() <= 3) continue;
      const SubgroupLattice& lat = lattice_of(f.group, cap);
      int nid = -1;
      for (int n : lat.normal_ids())
        if (n != lat.trivial_id() && n != lat.full_id()) {
          nid = n;
          break;
        }
      if (nid < 0) continue;
      ComplementSet cs = complements(lat, nid);
      QuotientGroup q = quotient_group(lat, nid);
      const SubgroupLattice& qlat = lattice_of(q.group, cap);
      BettiVector lq = betti_of(reduced_homology(order_complex(subgroup_poset(qlat))));
      std::vector<BettiVector> terms;
      for (int k : cs.complements) {
        auto inv = invariant_subgroup_ids(lat, nid, k, false);
        std::vector<Bitset> masks;
        std::vector<std::string> labels;
        for (int i : inv) {
          masks.push_back(lat.sub(i).mask);
          labels.push_back("H" + std::to_string(i));
        }
        const int m = int(masks.size());
        std::vector<Bitset> above((size_t)m, Bitset(m));
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            if (a != b && masks[size_t(a)].count() < masks[size_t(b)].count() &&
                masks[size_t(a)].subset_of(masks[size_t(b)]))
              above[size_t(a)].set(b);
        FinitePoset lkn = FinitePoset::from_above_masks(std::move(above), std::move(labels),
                                                        Provenance::Invariant);
        BettiVector lk = betti_of(reduced_homology(order_complex(lkn)));
        terms.push_back(suspension_betti(join_betti(lq, lk)));
      }
      BettiVector rhs = wedge_betti(terms);
      BettiVector lhs = betti_of(*f.subgroup_homology);
      if (!betti_equal(lhs, rhs)) {
        ok = false;
        fail = f.display;
      }
      if (!f.subgroup_homology->torsion_at(1).empty()) {
        ok = false;
        fail = f.display + " (torsion in H1)";
      }
    }
    out.push_back(check("properties/subgroup-wedge-decomposition", ok,
                        ok ? "nonsimple full-complex catalog groups" : "fails on " + fail));
  }

  {  // quotient vanishing transfers to the group
    bool ok = true;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      if (!f.full_complex) continue;
      const SubgroupLattice& lat = lattice_of(f.group, cap);
      for (int n : lat.normal_ids()) {
        if (n == lat.trivial_id() || n == lat.full_id()) continue;
        QuotientGroup q = quotient_group(lat, n);
        BettiVector bq = coset_betti_of_group(q.group, cap);
        int vanish = -1;
        while (bq.count(vanish + 1) == 0 && vanish + 1 <= 8) ++vanish;
        for (int i = 0; i <= vanish; ++i)
          if (f.coset_homology->betti_at(i) != 0) ok = false;
      }
    }
    out.push_back(check("properties/quotient-vanishing", ok,
                        "k-connected quotient complex forces k-connected group complex"));
  }

  {  // chief-length bound on subgroup homology
    bool ok = true;
    for (const auto& e : builtin_catalog()) {
      const GroupFacts& f = group_facts(e.spec, cap);
      if (!f.full_complex) continue;
      ChiefSeriesData cs = chief_series(f.group, cap);
      for (int i = 0; i <= cs.length - 3; ++i)
        if (f.subgroup_homology->betti_at(i) != 0) ok = false;
    }
    out.push_back(check("properties/normal-length-vanishing", ok,
                        "H~i(L(G)) = 0 for i <= d(G) - 3"));
  }

  {  // SNF invariants on real boundary matrices
    const GroupFacts& f = group_facts("sym:4", cap);
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    ChainComplex cc = chain_complex(order_complex(coset_poset(lat)));
    bool ok = true;
    for (size_t d = 1; d < cc.boundary.size(); ++d) {
      SNFResult a = smith_normal_form(cc.boundary[d]);
      SNFResult b = smith_normal_form(cc.boundary[d].transposed());
      if (a.divisors != b.divisors) ok = false;
      for (size_t i = 1; i < a.divisors.size(); ++i)
        if (a.divisors[i] % a.divisors[i - 1] != 0) ok = false;
    }
    out.push_back(check("properties/snf-transpose-and-chain", ok,
                        "divisors match transposes and form divisibility chains"));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"solvable", "bounds",     "covers", "pi1",
                                                 "zeta",     "inequality", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, long long cap) {
  if (suite == "solvable") return suite_solvable(cap);
  if (suite == "bounds") return suite_bounds(cap);
  if (suite == "covers") return suite_covers(cap);
  if (suite == "pi1") return suite_pi1(cap);
  if (suite == "zeta") return suite_zeta(cap);
  if (suite == "inequality") return suite_inequality(cap);
  if (suite == "joins") return suite_joins(cap);
  if (suite == "psl") return suite_psl(cap);
  if (suite == "properties") return suite_properties(cap);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"solvable", "bounds", "covers", "pi1", "zeta", "inequality",
                          "joins", "psl", "properties"})
      append(out, run_suite(s, cap));
    return out;
  }
  throw DomainError("unknown suite: " + suite +
                    " (expected solvable|bounds|covers|pi1|zeta|inequality|all)");
}

std::vector<CheckResult> acceptance_criteria(long long cap) {
  std::vector<CheckResult> out;

  auto aggregate = [](const std::string& id, const std::vector<CheckResult>& checks,
                      const std::string& extra = "") {
    int passed = 0;
    std::string first_fail;
    for (const auto& c : checks) {
      if (c.pass)
        ++passed;
      else if (first_fail.empty())
        first_fail = c.id + ": " + c.detail;
    }
    std::ostringstream os;
    os << passed << "/" << checks.size() << " checks";
    if (!extra.empty()) os << "; " << extra;
    if (!first_fail.empty()) os << "; first failure: " << first_fail;
    return check(id, passed == int(checks.size()), os.str());
  };

  {  // 1: the A5 coset complex
    const GroupFacts& f = group_facts("alt:5", cap);
    const SubgroupLattice& lat = lattice_of(f.group, cap);
    FinitePoset cp = coset_poset(lat);
    HomologySummary red = reduced_homology(order_complex(quillen_reduce(cp)));
    bool ok = cp.size() == 1018 && red.betti_at(1) == 0 && red.betti_at(2) == 1560 &&
              red.torsion_free() && red.chi_reduced == 1560;
    std::ostringstream os;
    os << "C(A5): " << cp.size() << " vertices; reduced complex has H~1 = " << red.betti_at(1)
       << ", H~2 = " << red.betti_at(2) << ", chi~ = " << red.chi_reduced
       << (red.torsion_free() ? ", torsion-free" : ", TORSION");
    out.push_back(check("criterion-01/A5-coset-complex", ok, os.str()));
  }

  out.push_back(aggregate("criterion-02/pi1-certificates", suite_pi1(cap)));
  out.push_back(aggregate("criterion-03/zeta-identity", suite_zeta(cap)));

  {  // 4: solvable coset cross-checks with the required instances
    auto checks = suite_solvable(cap);
    std::vector<std::string> required = {"Z4", "Z6",   "Z2xZ2", "S3",    "D4",
                                         "Q8", "A4",   "Z2xZ4", "S3xZ5", "S4"};
    bool covered = true;
    for (const auto& name : required) {
      bool found = false;
      for (const auto& c : checks)
        if (c.id == "solvable/coset/" + name && c.pass) found = true;
      covered = covered && found;
    }
    CheckResult agg = aggregate("criterion-04/solvable-coset", checks,
                                covered ? "all 10 required groups verified"
                                        : "a required group is missing");
    agg.pass = agg.pass && covered;
    out.push_back(agg);
  }

  {  // 5: subgroup poset cross-checks
    const GroupFacts& z4 = group_facts("cyclic:4", cap);
    const GroupFacts& s3 = group_facts("sym:3", cap);
    const GroupFacts& a4 = group_facts("alt:4", cap);
    bool ok = betti_of(*z4.subgroup_homology).empty() &&
              betti_equal(betti_of(*s3.subgroup_homology), BettiVector{{0, 3}}) &&
              betti_equal(betti_of(*a4.subgroup_homology), BettiVector{{0, 4}});
    out.push_back(check("criterion-05/subgroup-posets", ok,
                        "L(Z4) contractible; L(S3) = 3 zero-spheres; L(A4) = 4 zero-spheres"));
  }

  out.push_back(aggregate("criterion-06/mv-bounds", suite_bounds(cap)));
  out.push_back(aggregate("criterion-07/covers", suite_covers(cap)));
  out.push_back(aggregate("criterion-08/psl2-structure", suite_psl(cap)));
  out.push_back(aggregate("criterion-09/join-lemmas", suite_joins(cap)));
  out.push_back(aggregate("criterion-10/homology-inequality", suite_inequality(cap)));
  out.push_back(aggregate("criterion-11/property-suites", suite_properties(cap)));
  return out;
}

}  // namespace grptopo
