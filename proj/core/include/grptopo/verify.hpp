#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grptopo/homology.hpp"
#include "grptopo/mobius.hpp"
#include "grptopo/predictions.hpp"
#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

/// Per-group computation bundle shared across suites and reports; memoized
/// for the process lifetime. Full order complexes (and their homology) are
/// built only for catalog entries flagged full_complex.
struct GroupFacts {
  std::string spec;
  std::string display;
  Group group;
  bool full_complex = false;

  int subgroup_count = 0;
  int normal_count = 0;
  int maximal_count = 0;
  long long proper_coset_count = 0;
  bool solvable = false;
  bool simple = false;

  std::optional<SpherePrediction> coset_prediction;
  std::optional<SpherePrediction> subgroup_prediction;

  std::optional<long long> coset_chi_reduced;       // full complex
  std::optional<HomologySummary> coset_homology;    // full complex
  std::optional<HomologySummary> subgroup_homology;
  std::optional<HomologySummary> punctured_homology;
  std::optional<ZetaReport> zeta;
};

const GroupFacts& group_facts(const std::string& spec,
                              long long order_cap = kDefaultOrderCap);

/// Suite names accepted by the verify front end.
const std::vector<std::string>& suite_names();  // solvable bounds covers pi1 zeta inequality all

/// Runs one suite; "all" is the full acceptance set.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   long long order_cap = kDefaultOrderCap);

/// The acceptance criteria, one aggregated result per criterion (1-11).
std::vector<CheckResult> acceptance_criteria(long long order_cap = kDefaultOrderCap);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace grptopo
