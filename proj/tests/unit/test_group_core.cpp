#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "grptopo/action.hpp"
#include "grptopo/catalog.hpp"
#include "grptopo/errors.hpp"
#include "grptopo/psl2.hpp"
#include "grptopo/subgroup_lattice.hpp"

using namespace grptopo;

TEST_CASE("permutation basics") {
  Permutation p = Permutation::from_cycles(5, "(1 2 3)(4 5)");
  CHECK(p.cycle_string() == "(1 2 3)(4 5)");
  CHECK(p.order() == 6);
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation::from_cycles(3, "()").is_identity());
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 4)"), ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), DomainError);

  Permutation a = Permutation::from_cycles(2, "(1 2)");
  Permutation b = Permutation::from_cycles(3, "(1 2 3)");
  Permutation s = Permutation::direct_sum(a, b);
  CHECK(s.degree() == 5);
  CHECK(s.order() == 6);
}

TEST_CASE("catalog groups and orders") {
  CHECK(catalog_group("cyclic:6").order() == 6);
  CHECK(catalog_group("cyclic:6").degree() == 6);
  CHECK(catalog_group("elem:2^2").order() == 4);
  CHECK(catalog_group("dihedral:4").order() == 8);
  CHECK(catalog_group("dicyclic:2").order() == 8);   // quaternion group
  CHECK(catalog_group("dicyclic:3").order() == 12);  // dicyclic of order 12
  CHECK(catalog_group("sym:4").order() == 24);
  CHECK(catalog_group("alt:5").order() == 60);
  CHECK(catalog_group("psl2:7").order() == 168);
  CHECK(catalog_group("product:cyclic:2,cyclic:4").order() == 8);
  CHECK(catalog_group("product:product:cyclic:2,cyclic:2,cyclic:3").order() == 12);

  CHECK_THROWS_AS(catalog_group("nonsense:3"), ParseError);
  CHECK_THROWS_AS(catalog_group("psl2:4"), ParseError);
  CHECK_THROWS_AS(catalog_group("psl2:2"), ParseError);
  CHECK_THROWS_AS(catalog_group("psl2:17"), ParseError);
  CHECK_THROWS_AS(catalog_group("dihedral:2"), ParseError);
}

TEST_CASE("element orders") {
  Group a5 = catalog_group("alt:5");
  CHECK(a5.element_order(a5.identity()) == 1);
  int three_cycle = a5.index_of(Permutation::from_cycles(5, "(1 2 3)"));
  REQUIRE(three_cycle >= 0);
  CHECK(a5.element_order(three_cycle) == 3);

  const Psl2Model& m = psl2_model(7);
  // x + 1 has order 7.
  for (int e = 0; e < int(m.group.order()); ++e) {
    const MobiusTransform& t = m.labels[size_t(e)];
    if (t.a == 1 && t.b == 1 && t.c == 0 && t.d == 1) CHECK(m.group.element_order(e) == 7);
  }
}

TEST_CASE("generated subgroups") {
  Group a4 = catalog_group("alt:4");
  CHECK(a4.closure({}).count() == 1);
  int x = a4.index_of(Permutation::from_cycles(4, "(1 2)(3 4)"));
  int y = a4.index_of(Permutation::from_cycles(4, "(1 3)(2 4)"));
  REQUIRE(x >= 0);
  REQUIRE(y >= 0);
  CHECK(a4.closure({x, y}).count() == 4);

  Group a5 = catalog_group("alt:5");
  int five = a5.index_of(Permutation::from_cycles(5, "(1 2 3 4 5)"));
  int three = a5.index_of(Permutation::from_cycles(5, "(1 2 3)"));
  CHECK(a5.closure({five, three}).count() == 60);  // generates the whole group
}

TEST_CASE("subgroup lattices") {
  CHECK(lattice_of(catalog_group("cyclic:6")).count() == 4);
  CHECK(lattice_of(catalog_group("sym:3")).count() == 6);

  const SubgroupLattice& lat = lattice_of(catalog_group("alt:5"));
  CHECK(lat.count() == 59);
  CHECK(lat.proper_cosets().size() == 1018);

  // Census by order, cross-checked against the element census.
  std::map<long long, int> by_order;
  for (int i = 0; i < lat.count(); ++i) ++by_order[lat.sub(i).order];
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 15);  // one per involution
  CHECK(by_order[3] == 10);  // 20 three-cycles, two per subgroup
  CHECK(by_order[4] == 5);
  CHECK(by_order[5] == 6);  // 24 five-cycles, four per subgroup
  CHECK(by_order[6] == 10);
  CHECK(by_order[10] == 6);
  CHECK(by_order[12] == 5);
  CHECK(by_order[60] == 1);

  // The table is closed under meet and join.
  for (int i = 0; i < lat.count(); i += 7)
    for (int j = 0; j < lat.count(); j += 11) {
      CHECK(lat.meet(i, j) >= 0);
      CHECK(lat.join(i, j) >= 0);
    }

  // Lagrange and coset partitioning.
  for (int i = 0; i < lat.count(); ++i) CHECK(60 % lat.sub(i).order == 0);
  auto cosets = lat.cosets_of(5);
  Bitset seen(60);
  for (const auto& c : cosets) {
    CHECK((long long)c.members.size() == lat.sub(5).order);
    for (int m : c.members) {
      CHECK(!seen.test(m));
      seen.set(m);
    }
  }
  CHECK(seen.count() == 60);
}

TEST_CASE("left cosets are right cosets") {
  Group s4 = catalog_group("sym:4");
  const SubgroupLattice& lat = lattice_of(s4);
  // xH = (xHx^-1)x as sets, spot-checked across subgroups and reps.
  for (int h = 1; h < lat.count() - 1; h += 3) {
    for (int x = 0; x < int(s4.order()); x += 5) {
      std::set<int> left, right;
      for (int m : lat.sub(h).members) left.insert(s4.mul(x, m));
      for (int m : lat.sub(h).members) right.insert(s4.mul(s4.conj(x, m), x));
      CHECK(left == right);
    }
  }
}

TEST_CASE("normal subgroups") {
  const SubgroupLattice& s3 = lattice_of(catalog_group("sym:3"));
  CHECK(s3.normal_ids().size() == 3);
  CHECK(lattice_of(catalog_group("alt:5")).normal_ids().size() == 2);
  const SubgroupLattice& v4 = lattice_of(catalog_group("elem:2^2"));
  CHECK(v4.normal_ids().size() == size_t(v4.count()));  // abelian
}

TEST_CASE("chief series") {
  ChiefSeriesData s3 = chief_series(catalog_group("sym:3"));
  CHECK(s3.length == 2);
  CHECK(s3.complement_counts == std::vector<long long>{3, 1});
  CHECK(s3.complemented_count == 2);

  ChiefSeriesData z4 = chief_series(catalog_group("cyclic:4"));
  CHECK(z4.complement_counts == std::vector<long long>{0, 1});
  CHECK(z4.complemented_count == 1);

  ChiefSeriesData a4 = chief_series(catalog_group("alt:4"));
  CHECK(a4.complement_counts == std::vector<long long>{4, 1});

  // Deterministic: two runs build the identical series.
  ChiefSeriesData again = chief_series(catalog_group("sym:3"));
  CHECK(again.series == s3.series);
}

TEST_CASE("complements") {
  const SubgroupLattice& s3 = lattice_of(catalog_group("sym:3"));
  int a3 = -1;
  for (int n : s3.normal_ids())
    if (s3.sub(n).order == 3) a3 = n;
  CHECK(complements(s3, a3).count() == 3);

  const SubgroupLattice& z4 = lattice_of(catalog_group("cyclic:4"));
  int z2 = -1;
  for (int i = 0; i < z4.count(); ++i)
    if (z4.sub(i).order == 2) z2 = i;
  CHECK(complements(z4, z2).count() == 0);

  const SubgroupLattice& a4 = lattice_of(catalog_group("alt:4"));
  int v4 = -1;
  for (int n : a4.normal_ids())
    if (a4.sub(n).order == 4) v4 = n;
  CHECK(complements(a4, v4).count() == 4);

  CHECK_THROWS_AS(complements(s3, 1), DomainError);  // an order-2 subgroup is not normal
}

TEST_CASE("quotients") {
  auto check_quotient = [](const char* spec, long long normal_order, long long expect) {
    Group g = catalog_group(spec);
    const SubgroupLattice& lat = lattice_of(g);
    int nid = -1;
    for (int n : lat.normal_ids())
      if (lat.sub(n).order == normal_order) nid = n;
    REQUIRE(nid >= 0);
    QuotientGroup q = quotient_group(lat, nid);
    CHECK(q.group.order() == expect);
    // The projection is a homomorphism.
    for (int a = 0; a < int(g.order()); a += 3)
      for (int b = 0; b < int(g.order()); b += 5)
        CHECK(q.projection[size_t(g.mul(a, b))] ==
              q.group.mul(q.projection[size_t(a)], q.projection[size_t(b)]));
  };
  check_quotient("sym:3", 3, 2);
  check_quotient("alt:4", 4, 3);
  check_quotient("cyclic:6", 3, 2);
}

TEST_CASE("coset actions and 2-transitivity") {
  const SubgroupLattice& a5 = lattice_of(catalog_group("alt:5"));
  auto first_of_order = [&](long long o) {
    for (int i = 0; i < a5.count(); ++i)
      if (a5.sub(i).order == o) return i;
    return -1;
  };
  PermAction on_a4 = coset_action(a5, first_of_order(12));
  CHECK(on_a4.points == 5);
  CHECK(is_two_transitive(on_a4));
  PermAction on_d10 = coset_action(a5, first_of_order(10));
  CHECK(on_d10.points == 6);
  CHECK(is_two_transitive(on_d10));

  // On two points any transitive action is 2-transitive (the pair orbit is
  // a single one); the regular Z4 action on 4 points is not.
  const SubgroupLattice& z4 = lattice_of(catalog_group("cyclic:4"));
  int z2 = -1;
  for (int i = 0; i < z4.count(); ++i)
    if (z4.sub(i).order == 2) z2 = i;
  CHECK(is_two_transitive(coset_action(z4, z2)));
  CHECK_FALSE(is_two_transitive(coset_action(z4, z4.trivial_id())));

  // Independent witness search on small degrees: for every ordered pair of
  // distinct points, some element maps the base pair onto it.
  auto witness_two_transitive = [](const PermAction& a) {
    if (a.points < 2) return false;
    for (int c = 0; c < a.points; ++c)
      for (int d = 0; d < a.points; ++d) {
        if (c == d) continue;
        bool found = false;
        for (int e = 0; e < int(a.acting.order()) && !found; ++e)
          if (a.table[size_t(e)][0] == c && a.table[size_t(e)][1] == d) found = true;
        if (!found) return false;
      }
    return true;
  };
  CHECK(witness_two_transitive(on_a4) == is_two_transitive(on_a4));
  CHECK(witness_two_transitive(on_d10) == is_two_transitive(on_d10));
  CHECK(witness_two_transitive(coset_action(z4, z2)) ==
        is_two_transitive(coset_action(z4, z2)));
  CHECK(witness_two_transitive(coset_action(z4, z4.trivial_id())) == false);
}

TEST_CASE("coprimality") {
  CHECK(is_coprime(catalog_group("sym:3"), catalog_group("cyclic:5")));
  CHECK_FALSE(is_coprime(catalog_group("cyclic:6"), catalog_group("cyclic:3")));
  CHECK(is_coprime(catalog_group("alt:5"), catalog_group("cyclic:2")));
  CHECK(are_isomorphic(catalog_group("sym:3"), catalog_group("dihedral:3")));
  CHECK_FALSE(are_isomorphic(catalog_group("dicyclic:2"), catalog_group("dihedral:4")));
  CHECK_FALSE(are_isomorphic(catalog_group("cyclic:4"), catalog_group("elem:2^2")));
}

TEST_CASE("psl2 model") {
  const Psl2Model& m = psl2_model(7);
  CHECK(m.group.order() == 168);

  // The three table rows quoted for p = 7.
  for (int e = 1; e < int(m.group.order()); ++e) {
    const MobiusTransform& t = m.labels[size_t(e)];
    long long o = m.group.element_order(e);
    CHECK(order_from_trace(7, t.trace_squared()) == o);
    if (t.a == 1 && t.b == 1 && t.c == 0 && t.d == 1) {
      CHECK(t.trace_squared() == 4);
      CHECK(o == 7);
    }
    // -1/x is (0,-1,1,0): canonical sign makes it (0,1,6,0) or (0,-1,1,0) mod sign.
    if (t.b != 0 && t.a == 0 && t.d == 0) CHECK(o == 2);
  }
  CHECK_THROWS_AS(order_from_trace(7, 3), DomainError);
  CHECK_THROWS_AS(order_from_trace(5, 0), DomainError);

  // (4x+1)/(-x): tr^2 = 16 mod 7 = 2, order 4.
  CHECK(order_from_trace(7, 2) == 4);
}

TEST_CASE("group files") {
  std::string dir = "grptopo_test_files";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir + "/z7z3.sdg");
    f << "# Z7 : Z3 (Frobenius of order 21)\n";
    f << "normal-degree 7\n";
    f << "normal-gen (1 2 3 4 5 6 7)\n";
    f << "acting-degree 3\n";
    f << "acting-gen (1 2 3)\n";
    f << "twist 1 1 (1 3 5 7 2 4 6)\n";  // x -> x^2, an order-3 automorphism
  }
  Group g = catalog_group("semidirect:" + dir + "/z7z3.sdg");
  CHECK(g.order() == 21);
  CHECK_FALSE(g.is_abelian());
  const SubgroupLattice& lat = lattice_of(g);
  CHECK(lat.count() == 10);  // 1, Z7, seven Z3, G

  {
    std::ofstream f(dir + "/k4.grp");
    f << "degree 4\ngen (1 2)(3 4)\ngen (1 3)(2 4)\n";
  }
  CHECK(catalog_group("file:" + dir + "/k4.grp").order() == 4);

  {
    std::ofstream f(dir + "/bad.grp");
    f << "degree 3\nnot-a-gen (1 2)\n";
  }
  CHECK_THROWS_AS(catalog_group("file:" + dir + "/bad.grp"), ParseError);
  CHECK_THROWS_AS(catalog_group("file:" + dir + "/missing.grp"), ParseError);

  {
    std::ofstream f(dir + "/bad_twist.sdg");
    f << "normal-degree 3\nnormal-gen (1 2 3)\nacting-degree 2\nacting-gen (1 2)\n";
    f << "twist 1 1 (1 2)\n";  // image has order 2: not an automorphism image of a 3-cycle
  }
  CHECK_THROWS_AS(catalog_group("semidirect:" + dir + "/bad_twist.sdg"), ParseError);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(lattice_of(catalog_group("psl2:11"), 400), CapExceeded);
  CHECK(psl2_model(11).group.order() == 660);
  CHECK(psl2_model(13).group.order() == 1092);
}
