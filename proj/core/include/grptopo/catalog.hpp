#pragma once

#include <string>
#include <vector>

#include "grptopo/group.hpp"

namespace grptopo {

/// Builds a group from a descriptor string. Supported forms:
///   cyclic:n            regular representation of Z/n
///   elem:p^k            elementary abelian, k disjoint p-cycles
///   dihedral:n          order 2n on n points (n >= 3)
///   dicyclic:n          order 4n (n >= 2); dicyclic:2 is the quaternion group
///   sym:n / alt:n       natural representations
///   psl2:p              Mobius-transformation model, odd prime p <= 13
///   product:<a>,<b>     direct product on disjoint point sets
///   semidirect:<file>   semidirect-product file (see docs/formats.md)
///   file:<path>         plain group file: degree line + generator lines
Group catalog_group(const std::string& spec);

/// Data parsed from a semidirect file: twist[i][j] is the image of the j-th
/// normal generator under the i-th acting generator.
struct SemidirectSpec {
  Group normal;
  Group acting;
  std::vector<std::vector<Permutation>> twist;
};

/// Faithful representation of normal ⋊ acting on |normal| + deg(acting)
/// points: the first block carries the affine action h·φ_k(x) on the normal
/// group's elements, the second the acting group's own representation.
Group build_semidirect(const SemidirectSpec& spec, const std::string& name = "semidirect");

Group parse_group_file(const std::string& path);
SemidirectSpec parse_semidirect_file(const std::string& path);

struct CatalogEntry {
  std::string spec;
  std::string display;
  bool full_complex;  // whether verification suites build the full order complex
};

/// The curated built-in group list driving `catalog` and the verify suites.
const std::vector<CatalogEntry>& builtin_catalog();

}  // namespace grptopo
