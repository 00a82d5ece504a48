#include <doctest.h>

#include "grptopo/atomized.hpp"
#include "grptopo/catalog.hpp"
#include "grptopo/errors.hpp"
#include "grptopo/group_posets.hpp"
#include "grptopo/homology.hpp"
#include "grptopo/betti.hpp"

using namespace grptopo;

TEST_CASE("poset construction and validation") {
  auto chain = FinitePoset::from_less_pairs(3, {{0, 1}, {1, 2}});
  CHECK(chain.less(0, 2));  // transitive closure
  CHECK(chain.cover_pairs().size() == 2);
  CHECK_THROWS_AS(FinitePoset::from_less_pairs(2, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(FinitePoset::from_less_pairs(2, {{0, 0}}), DomainError);

  // Cover list regenerates the relation.
  auto round = FinitePoset::parse(chain.serialize());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(round.less(i, j) == chain.less(i, j));
}

TEST_CASE("order complexes") {
  auto antichain = FinitePoset::from_less_pairs(4, {});
  auto k1 = order_complex(antichain);
  CHECK(k1.face_count(0) == 4);
  CHECK(k1.face_count(1) == 0);

  auto chain = FinitePoset::from_less_pairs(3, {{0, 1}, {1, 2}});
  auto k2 = order_complex(chain);
  CHECK(k2.face_count(0) == 3);
  CHECK(k2.face_count(1) == 3);
  CHECK(k2.face_count(2) == 1);
  k2.validate();

  auto k3 = order_complex(coset_poset(lattice_of(catalog_group("elem:2^2"))));
  CHECK(k3.face_count(0) == 10);
  CHECK(k3.face_count(1) == 12);
  CHECK(k3.face_count(2) == 0);
}

TEST_CASE("components") {
  CHECK(subgroup_poset(lattice_of(catalog_group("sym:3"))).component_count() == 4);
  CHECK(subgroup_poset(lattice_of(catalog_group("elem:2^2"))).component_count() == 3);
  CHECK(coset_poset(lattice_of(catalog_group("sym:3"))).component_count() == 1);
}

TEST_CASE("atomized views") {
  // Coset posets are atomized with the singletons as atoms.
  auto cp = coset_poset(lattice_of(catalog_group("sym:3")));
  auto ar = atomize(cp);
  REQUIRE(ar.atomized());
  CHECK(ar.view->atoms().size() == 6);

  // L(Z6) has atoms Z2 and Z3.
  auto lp = subgroup_poset(lattice_of(catalog_group("cyclic:6")));
  auto lr = atomize(lp);
  REQUIRE(lr.atomized());
  CHECK(lr.view->atoms().size() == 2);

  // A unique minimal element makes the five-element poset atomized even
  // though its maximal elements have no meet.
  auto bowtie = FinitePoset::from_less_pairs(
      5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(atomize(bowtie).atomized());

  // Two minimal elements bounded by two incomparable tops: rejected.
  auto diamond_free = FinitePoset::from_less_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto rej = atomize(diamond_free);
  CHECK_FALSE(rej.atomized());
  CHECK(rej.rejection_witness == std::vector<int>{0, 1});
}

TEST_CASE("atom joins") {
  const SubgroupLattice& lat = lattice_of(catalog_group("cyclic:6"));
  auto cp = coset_poset(lat);
  auto ar = atomize(cp);
  REQUIRE(ar.atomized());
  // Singleton joins to itself.
  CHECK(ar.view->join({0}) == 0);
  // {1} and {generator} generate the whole poset.
  int gen = -1;
  const Group& g = lat.group();
  for (int e = 1; e < int(g.order()); ++e)
    if (g.element_order(e) == 6) gen = e;
  CHECK(ar.view->join({0, gen}) == kWhole);

  // In C(S3), two singletons {x},{y} with <x^-1 y> proper join to the coset
  // x<x^-1 y>.
  const SubgroupLattice& s3 = lattice_of(catalog_group("sym:3"));
  auto cps3 = coset_poset(s3);
  auto ars3 = atomize(cps3);
  const Group& gs3 = s3.group();
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) {
      int d = gs3.mul(gs3.inv(x), y);
      if (gs3.closure({d}).count() == 6) continue;
      int j = ars3.view->join({x, y});
      REQUIRE(j != kWhole);
      // The join is a coset containing both x and y of the cyclic subgroup
      // generated by the difference.
      Bitset expected(6);
      for (int m : gs3.closure({d}).to_indices()) expected.set(gs3.mul(x, m));
      const auto& cosets = s3.proper_cosets();
      CHECK(cosets[size_t(j)].mask == expected);
    }
}

TEST_CASE("minimal covers") {
  {  // M(Z4): edge {0,2} present, edges to generators absent
    const SubgroupLattice& lat = lattice_of(catalog_group("cyclic:4"));
    auto ar = atomize(coset_poset(lat));
    auto m = minimal_cover(*ar.view);
    CHECK(m.face_count(0) == 4);
    CHECK(m.face_count(1) == 2);  // {0,2} and its translate {1,3}
  }
  {  // M(Z2 x Z2) is the complete graph on four vertices
    const SubgroupLattice& lat = lattice_of(catalog_group("elem:2^2"));
    auto ar = atomize(coset_poset(lat));
    auto m = minimal_cover(*ar.view);
    CHECK(m.face_count(1) == 6);
    CHECK(m.face_count(2) == 0);
    CHECK(betti_equal(betti_of(reduced_homology(m)), BettiVector{{1, 3}}));
  }
  {  // dimension cap sets the truncation flag
    const SubgroupLattice& lat = lattice_of(catalog_group("sym:4"));
    auto ar = atomize(coset_poset(lat));
    MinimalCoverOptions opts;
    opts.max_dim = 2;
    auto m = minimal_cover(*ar.view, opts);
    CHECK(m.truncated());
    CHECK(m.truncation_dim == 2);
  }
}

TEST_CASE("no k atoms generate") {
  auto v4 = atomize(coset_poset(lattice_of(catalog_group("elem:2^2"))));
  CHECK(no_k_atoms_generate(*v4.view, 2));
  auto z6 = atomize(coset_poset(lattice_of(catalog_group("cyclic:6"))));
  CHECK_FALSE(no_k_atoms_generate(*z6.view, 2));
  // k atoms of C(G) generate exactly when G is (k-1)-generated: pairs of
  // singletons never generate C(A5) (A5 is not cyclic), but triples do.
  auto a5 = atomize(coset_poset(lattice_of(catalog_group("alt:5"))));
  CHECK(no_k_atoms_generate(*a5.view, 2));
  CHECK_FALSE(no_k_atoms_generate(*a5.view, 3));
}

TEST_CASE("quillen reduction") {
  // A chain is a cone and collapses to a point.
  auto chain = FinitePoset::from_less_pairs(3, {{0, 1}, {1, 2}});
  CHECK(quillen_reduce(chain).size() == 1);

  // Homology is preserved on a group-sized instance.
  auto cp = coset_poset(lattice_of(catalog_group("sym:4")));
  auto before = betti_of(reduced_homology(order_complex(cp)));
  auto reduced = quillen_reduce(cp);
  CHECK(reduced.size() < cp.size());
  CHECK(betti_equal(before, betti_of(reduced_homology(order_complex(reduced)))));
}

TEST_CASE("restriction and isomorphism checks") {
  auto p = FinitePoset::from_less_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto sub = p.restricted_to({0, 1, 3}, Provenance::Generic);
  CHECK(sub.size() == 3);
  CHECK(sub.less(0, 2));

  CHECK(p.is_isomorphic_by(p, {0, 1, 2, 3}));
  CHECK(p.is_isomorphic_by(p, {0, 2, 1, 3}));   // swap the middle layer
  CHECK_FALSE(p.is_isomorphic_by(p, {3, 1, 2, 0}));
}

TEST_CASE("serialization formats") {
  auto p = coset_poset(lattice_of(catalog_group("sym:3")));
  auto q = FinitePoset::parse(p.serialize());
  CHECK(q.size() == p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) CHECK(p.less(i, j) == q.less(i, j));

  auto k = order_complex(p);
  auto k2 = SimplicialComplex::parse(k.serialize());
  CHECK(k2.faces == k.faces);
}
