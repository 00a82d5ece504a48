#pragma once

#include <string>

#include "grptopo/cache.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// What `compute` should produce for one group. Dependencies close over the
/// requested pieces (verification implies predictions and homology, homology
/// implies posets).
struct ReportRequest {
  std::string group_spec;
  bool homology_coset = false;
  bool homology_subgroup = false;
  bool predict_coset = false;
  bool predict_subgroup = false;
  bool zeta = false;
  bool bounds = false;
  bool pi1 = false;
  bool verify = false;  // compare predictions against computed homology
  long long order_cap = kDefaultOrderCap;
  CacheConfig cache;
};

/// JSON report document (schema 1, stable key order). Byte-identical across
/// runs for a fixed request; cached when the cache is enabled.
std::string compute_report_json(const ReportRequest& req);

/// Betti-table CSV ("poset,dimension,rank" rows) for the same request.
std::string compute_betti_csv(const ReportRequest& req);

}  // namespace grptopo
