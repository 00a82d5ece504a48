#include "grptopo/report.hpp"

#include <json.hpp>
#include <sstream>

#include "grptopo/betti.hpp"
#include "grptopo/bounds.hpp"
#include "grptopo/catalog.hpp"
#include "grptopo/classify.hpp"
#include "grptopo/errors.hpp"
#include "grptopo/group_posets.hpp"
#include "grptopo/mobius.hpp"
#include "grptopo/pi1.hpp"
#include "grptopo/predictions.hpp"

namespace grptopo {

namespace {

using json = nlohmann::ordered_json;

json betti_json(const BettiVector& b) {
  json out = json::object();
  for (const auto& [d, r] : b) out[std::to_string(d)] = r;
  return out;
}

json homology_json(const HomologySummary& h) {
  json out = json::object();
  out["betti"] = betti_json(betti_of(h));
  json tor = json::object();
  for (const auto& [d, divs] : h.torsion)
    if (!divs.empty()) tor[std::to_string(d)] = divs;
  out["torsion"] = tor;
  if (!h.truncated) {
    out["chi"] = h.chi;
    out["chi_reduced"] = h.chi_reduced;
  }
  out["truncated"] = h.truncated;
  if (h.truncated) out["reliable_dim"] = h.reliable_dim;
  return out;
}

std::string request_id(const ReportRequest& r) {
  std::ostringstream os;
  os << "report;hc=" << r.homology_coset << ";hs=" << r.homology_subgroup
     << ";pc=" << r.predict_coset << ";ps=" << r.predict_subgroup << ";z=" << r.zeta
     << ";b=" << r.bounds << ";p=" << r.pi1 << ";v=" << r.verify << ";cap=" << r.order_cap;
  return os.str();
}

json build_report(const ReportRequest& req_in) {
  ReportRequest req = req_in;
  // Dependency closure.
  if (req.verify) {
    req.predict_coset = req.predict_subgroup = true;
    req.homology_coset = req.homology_subgroup = true;
  }
  if (req.bounds) req.homology_coset = true;

  Group g = catalog_group(req.group_spec);
  const SubgroupLattice& lat = lattice_of(g, req.order_cap);

  json doc;
  doc["schema"] = 1;

  bool in_f = false, in_fp = false;
  classify_f_family(lat, &in_f, &in_fp);
  doc["group"] = {{"spec", req.group_spec}, {"name", g.name()},      {"order", g.order()},
                  {"degree", g.degree()},   {"solvable", g.is_solvable()},
                  {"simple", is_simple_group(lat)},
                  {"in_F", in_f},           {"in_F_prime", in_fp}};
  doc["lattice"] = {{"subgroups", lat.count()},
                    {"normal_subgroups", lat.normal_ids().size()},
                    {"maximal_subgroups", lat.maximal_ids().size()},
                    {"proper_cosets", lat.proper_cosets().size()}};

  std::optional<HomologySummary> coset_h, subgroup_h;
  json posets = json::object();
  if (req.homology_coset) {
    FinitePoset cp = coset_poset(lat);
    auto k = order_complex(cp);
    coset_h = reduced_homology(k);
    json entry = homology_json(*coset_h);
    entry["elements"] = cp.size();
    entry["components"] = cp.component_count();
    posets["coset"] = entry;
  }
  if (req.homology_subgroup) {
    FinitePoset sp = subgroup_poset(lat);
    subgroup_h = reduced_homology(order_complex(sp));
    json entry = homology_json(*subgroup_h);
    entry["elements"] = sp.size();
    entry["components"] = sp.component_count();
    posets["subgroup"] = entry;
  }
  if (!posets.empty()) doc["posets"] = posets;

  json predictions = json::object();
  std::optional<SpherePrediction> cpred, spred;
  if ((req.predict_coset || req.predict_subgroup) && !g.is_solvable()) {
    predictions["note"] = "group is not solvable; sphere formulas do not apply";
  } else {
    if (req.predict_coset) {
      cpred = predict_coset_spheres(g, req.order_cap);
      predictions["coset"] = {{"spheres", cpred->count},
                              {"dimension", cpred->dimension},
                              {"text", cpred->to_string()}};
    }
    if (req.predict_subgroup && g.order() > 1) {
      spred = predict_subgroup_spheres(g, req.order_cap);
      predictions["subgroup"] = {{"spheres", spred->count},
                                 {"dimension", spred->dimension},
                                 {"contractible", spred->contractible},
                                 {"text", spred->to_string()}};
    }
  }
  if (!predictions.empty()) doc["predictions"] = predictions;

  if (req.zeta) {
    std::optional<long long> chi;
    if (coset_h && !coset_h->truncated) chi = coset_h->chi_reduced;
    ZetaReport zr = zeta_report(lat, {-2, -1, 1, 2}, chi);
    json zj;
    json vals = json::object();
    for (const auto& [s, v] : zr.values) vals[std::to_string(s)] = v.to_string();
    zj["P"] = vals;
    zj["P_at_minus_1"] = zr.p_at_minus_one;
    if (zr.identity_checked) {
      zj["chi_reduced"] = *zr.chi_reduced;
      zj["identity_holds"] = zr.identity_holds;
    }
    doc["zeta"] = zj;
  }

  if (req.bounds && coset_h) {
    BoundsReport br = check_mv_bounds(lat, *coset_h);
    json arr = json::array();
    for (const auto& b : br.instances)
      arr.push_back({{"kind", b.kind == BoundInstance::Kind::CyclicMaximal
                                  ? "cyclic-maximal"
                                  : "subgroup-components"},
                     {"bound", b.bound},
                     {"detail", b.detail}});
    doc["bounds"] = {{"instances", arr},
                     {"h1_rank", br.h1_rank},
                     {"all_satisfied", br.all_satisfied}};
  }

  std::optional<bool> cert;
  if (req.pi1) {
    json pj;
    if (lat.is_cyclic(lat.full_id())) {
      pj["note"] = "cyclic group: standard presentation unavailable";
    } else {
      EdgePresentation p = EdgePresentation::standard(g, req.order_cap);
      PropagationResult r = propagate_triviality(p);
      cert = r.complete;
      pj["edges"] = r.edge_count;
      pj["trivial"] = r.trivial_count;
      pj["certificate"] = r.complete;
      if (r.complete) pj["derivation_steps"] = r.certificate->steps.size();
    }
    doc["pi1"] = pj;
  }

  {
    ClassifyInputs ci;
    if (coset_h) ci.coset_homology = &*coset_h;
    if (subgroup_h) ci.subgroup_homology = &*subgroup_h;
    ci.pi1_certificate = cert;
    ConnectivityClassification c = classify_connectivity(g, ci, req.order_cap);
    json vj;
    vj["coset_connected"] = c.coset_connected;
    vj["coset_connected_provenance"] = c.coset_connected_provenance;
    vj["coset_pi1"] = pi1_status_name(c.coset_pi1);
    vj["coset_pi1_provenance"] = c.coset_pi1_provenance;
    if (c.coset_pi1 == Pi1Status::CertifiedNontrivial)
      vj["coset_h1_lower_bound"] = c.coset_h1_lower_bound;
    vj["subgroup_connected"] = c.subgroup_connected;
    vj["subgroup_connected_provenance"] = c.subgroup_connected_provenance;
    if (c.subgroup_pi1_free_rank) {
      vj["subgroup_pi1_free_rank"] = *c.subgroup_pi1_free_rank;
      vj["subgroup_pi1_provenance"] = c.subgroup_pi1_provenance;
    }
    doc["verdicts"] = vj;
  }

  if (req.verify) {
    json vj = json::object();
    if (cpred && coset_h) {
      bool ok = betti_equal(betti_of(*coset_h), cpred->expected_betti()) &&
                coset_h->torsion_free();
      vj["coset_prediction_matches"] = ok;
    }
    if (spred && subgroup_h) {
      bool ok = betti_equal(betti_of(*subgroup_h), spred->expected_betti()) &&
                subgroup_h->torsion_free();
      vj["subgroup_prediction_matches"] = ok;
    }
    doc["verified"] = vj;
  }
  return doc;
}

}  // namespace

std::string compute_report_json(const ReportRequest& req) {
  Group g = catalog_group(req.group_spec);
  std::string key = cache_key(g.canonical_key(), request_id(req));
  if (auto cached = cache_get(req.cache, key)) return *cached;
  std::string payload = build_report(req).dump(2) + "\n";
  cache_put(req.cache, key, payload);
  return payload;
}

std::string compute_betti_csv(const ReportRequest& req_in) {
  ReportRequest req = req_in;
  req.homology_coset = true;
  req.homology_subgroup = true;
  Group g = catalog_group(req.group_spec);
  const SubgroupLattice& lat = lattice_of(g, req.order_cap);
  std::ostringstream os;
  os << "poset,dimension,rank\n";
  auto emit = [&](const char* name, const HomologySummary& h) {
    for (const auto& [d, r] : h.betti)
      if (r != 0) os << name << ',' << d << ',' << r << "\n";
  };
  emit("coset", reduced_homology(order_complex(coset_poset(lat))));
  emit("subgroup", reduced_homology(order_complex(subgroup_poset(lat))));
  return os.str();
}

}  // namespace grptopo
