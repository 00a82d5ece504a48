#include <doctest.h>

#include <map>
#include <set>

#include "grptopo/catalog.hpp"
#include "grptopo/errors.hpp"
#include "grptopo/pi1.hpp"

using namespace grptopo;

namespace {

/// Reference propagation over explicit edge/triangle lists; the oracle for
/// the group-backed implementation and for monotonicity.
std::set<std::pair<int, int>> mini_propagate(int n,
                                             const std::vector<std::pair<int, int>>& tree,
                                             const std::set<std::pair<int, int>>& edges,
                                             const std::set<std::vector<int>>& triangles) {
  auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::set<std::pair<int, int>> trivial(tree.begin(), tree.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : triangles) {
      std::pair<int, int> ab = norm(t[0], t[1]), ac = norm(t[0], t[2]), bc = norm(t[1], t[2]);
      for (auto [target, e1, e2] :
           {std::make_tuple(ab, ac, bc), std::make_tuple(ac, ab, bc), std::make_tuple(bc, ab, ac)}) {
        if (!trivial.count(target) && trivial.count(e1) && trivial.count(e2) &&
            edges.count(target)) {
          trivial.insert(target);
          changed = true;
        }
      }
    }
  }
  return trivial;
}

struct ExplicitSkeleton {
  int n = 0;
  std::set<std::pair<int, int>> edges;
  std::set<std::vector<int>> triangles;
};

ExplicitSkeleton skeleton_of(const EdgePresentation& p) {
  ExplicitSkeleton s;
  s.n = p.vertices();
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (p.edge(u, v)) s.edges.insert({u, v});
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      for (int w = v + 1; w < s.n; ++w)
        if (p.triangle(u, v, w)) s.triangles.insert({u, v, w});
  return s;
}

}  // namespace

TEST_CASE("standard presentation structure") {
  Group v4 = catalog_group("elem:2^2");
  EdgePresentation p = EdgePresentation::standard(v4);
  CHECK(p.vertices() == 4);
  CHECK(p.tree_edges().size() == 3);  // the star at the identity
  for (auto [u, v] : p.tree_edges()) CHECK(u == 0);

  CHECK_THROWS_AS(EdgePresentation::standard(catalog_group("cyclic:6")), DomainError);

  // For non-cyclic groups the 1-skeleton is complete.
  Group a5 = catalog_group("alt:5");
  CHECK(EdgePresentation::standard(a5).edge_count() == 60 * 59 / 2);
}

TEST_CASE("propagation matches the explicit-list oracle") {
  for (const char* spec : {"sym:4", "alt:4"}) {
    Group g = catalog_group(spec);
    EdgePresentation p = EdgePresentation::standard(g);
    ExplicitSkeleton s = skeleton_of(p);
    auto expected = mini_propagate(s.n, p.tree_edges(), s.edges, s.triangles);
    PropagationResult r = propagate_triviality(p);
    CHECK(r.trivial_count == (long long)expected.size());
  }
  {
    Group z6 = catalog_group("cyclic:6");
    EdgePresentation p = EdgePresentation::with_bfs_tree(z6);
    ExplicitSkeleton s = skeleton_of(p);
    auto expected = mini_propagate(s.n, p.tree_edges(), s.edges, s.triangles);
    PropagationResult r = propagate_triviality(p);
    CHECK_FALSE(r.complete);
    CHECK(r.trivial_count == (long long)expected.size());
  }
}

TEST_CASE("propagation is order-insensitive") {
  for (const char* spec : {"alt:4", "sym:4", "cyclic:6"}) {
    Group g = catalog_group(spec);
    EdgePresentation p = (spec == std::string("cyclic:6"))
                             ? EdgePresentation::with_bfs_tree(g)
                             : EdgePresentation::standard(g);
    PropagationResult base = propagate_triviality(p);
    for (unsigned seed : {1u, 7u, 1234u}) {
      PropagationResult shuffled = propagate_triviality(p, seed);
      CHECK(shuffled.trivial_count == base.trivial_count);
      CHECK(shuffled.complete == base.complete);
    }
  }
}

TEST_CASE("monotonicity: more triangles never shrink the fixpoint") {
  Group g = catalog_group("sym:4");
  EdgePresentation p = EdgePresentation::standard(g);
  ExplicitSkeleton s = skeleton_of(p);
  auto full = mini_propagate(s.n, p.tree_edges(), s.edges, s.triangles);

  // Drop every third triangle; the fixpoint must be a subset of the full one.
  std::set<std::vector<int>> fewer;
  int i = 0;
  for (const auto& t : s.triangles)
    if (i++ % 3 != 0) fewer.insert(t);
  auto partial = mini_propagate(s.n, p.tree_edges(), s.edges, fewer);
  for (const auto& e : partial) CHECK(full.count(e) == 1);
  CHECK(partial.size() <= full.size());
}

TEST_CASE("certificates replay and reject tampering") {
  Group g = catalog_group("sym:4");
  EdgePresentation p = EdgePresentation::standard(g);
  PropagationResult r = propagate_triviality(p);
  REQUIRE(r.complete);
  REQUIRE(r.certificate.has_value());
  CHECK(replay_certificate(p, *r.certificate));

  // Dropping a step breaks the replay (later steps lose a premise or the
  // final count falls short).
  TrivialityCertificate broken = *r.certificate;
  broken.steps.erase(broken.steps.begin());
  CHECK_FALSE(replay_certificate(p, broken));

  // Reordering a derivation before its premises also fails.
  TrivialityCertificate swapped = *r.certificate;
  if (swapped.steps.size() > 2) {
    std::swap(swapped.steps.front(), swapped.steps.back());
    CHECK_FALSE(replay_certificate(p, swapped));
  }

  CHECK_THROWS_AS(TrivialityCertificate::parse("garbage line"), ParseError);
}

TEST_CASE("condition (2) search") {
  Condition2Result a5 = condition2_search(catalog_group("alt:5"));
  CHECK(a5.pass);
  CHECK(a5.generating_pairs > 0);

  // Products of non-cyclic groups satisfy the condition.
  Condition2Result s33 = condition2_search(catalog_group("product:sym:3,sym:3"));
  CHECK(s33.pass);

  CHECK_THROWS_AS(condition2_search(catalog_group("cyclic:6")), DomainError);
}

TEST_CASE("n-local checks") {
  CHECK(n_local_check(catalog_group("alt:5"), 2).pass);
  CHECK(n_local_check(catalog_group("psl2:7"), 2).pass);
  NLocalResult z6 = n_local_check(catalog_group("cyclic:6"), 2);
  CHECK_FALSE(z6.pass);
  CHECK(!z6.residual_sample.empty());
  CHECK_THROWS_AS(n_local_check(catalog_group("cyclic:3"), 2), DomainError);
}
