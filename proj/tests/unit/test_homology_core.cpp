#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "grptopo/betti.hpp"
#include "grptopo/catalog.hpp"
#include "grptopo/errors.hpp"
#include "grptopo/group_posets.hpp"
#include "grptopo/homology.hpp"

using namespace grptopo;

namespace {

/// Textbook dense Smith normal form over int64; the independent oracle for
/// the sparse engine. Row/column gcd reduction on a full matrix.
std::vector<long long> dense_snf(std::vector<std::vector<long long>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long long> divisors;
  size_t top = 0;
  while (top < rows && top < cols) {
    // Find a nonzero pivot.
    size_t pr = rows, pc = cols;
    for (size_t i = top; i < rows && pr == rows; ++i)
      for (size_t j = top; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(m[top], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = top + 1; i < rows; ++i) {
        while (m[i][top] != 0) {
          long long q = m[top][top] == 0 ? 0 : m[i][top] / m[top][top];
          for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[top][j];
          if (m[i][top] != 0) std::swap(m[i], m[top]);
        }
      }
      for (size_t j = top + 1; j < cols; ++j) {
        while (m[top][j] != 0) {
          long long q = m[top][top] == 0 ? 0 : m[top][j] / m[top][top];
          for (size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][top];
          if (m[top][j] != 0) {
            for (size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][top]);
            dirty = true;
          }
        }
      }
    }
    divisors.push_back(m[top][top] < 0 ? -m[top][top] : m[top][top]);
    ++top;
  }
  // Enforce the divisibility chain.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < divisors.size(); ++i)
      for (size_t j = i + 1; j < divisors.size(); ++j)
        if (divisors[j] % divisors[i] != 0) {
          long long g = std::gcd(divisors[i], divisors[j]);
          long long l = divisors[i] / g * divisors[j];
          divisors[i] = g;
          divisors[j] = l;
          changed = true;
        }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

SparseIntMatrix to_sparse(const std::vector<std::vector<long long>>& m) {
  SparseIntMatrix s;
  s.rows = int(m.size());
  s.cols = m.empty() ? 0 : int(m[0].size());
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j)
      if (m[size_t(i)][size_t(j)] != 0) s.entries.push_back({i, j, m[size_t(i)][size_t(j)]});
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  std::vector<std::vector<long long>> id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto r = smith_normal_form(to_sparse(id3));
  CHECK(r.rank == 3);
  CHECK(r.divisors == std::vector<long long>{1, 1, 1});

  std::vector<std::vector<long long>> d24 = {{2, 0}, {0, 4}};
  CHECK(smith_normal_form(to_sparse(d24)).divisors == std::vector<long long>{2, 4});

  // Divisibility has to be restored when the diagonal arrives unordered.
  std::vector<std::vector<long long>> mixed = {{4, 0}, {0, 6}};
  CHECK(smith_normal_form(to_sparse(mixed)).divisors == std::vector<long long>{2, 12});
}

TEST_CASE("smith vs dense oracle on random matrices") {
  std::mt19937 rng(20240815);
  std::uniform_int_distribution<int> dim(1, 7), val(-4, 4);
  for (int trial = 0; trial < 120; ++trial) {
    size_t r = size_t(dim(rng)), c = size_t(dim(rng));
    std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
    for (auto& row : m)
      for (auto& v : row) v = val(rng);
    auto expected = dense_snf(m);
    auto got = smith_normal_form(to_sparse(m));
    CHECK(got.divisors == expected);
    // Transposes share elementary divisors.
    CHECK(smith_normal_form(to_sparse(m).transposed()).divisors == expected);
  }
}

TEST_CASE("smith handles coefficient growth exactly") {
  // Dense random-ish matrix with larger entries; fraction-free updates must
  // stay exact (possibly via the bignum rerun).
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> val(-50, 50);
  std::vector<std::vector<long long>> m(6, std::vector<long long>(6));
  for (auto& row : m)
    for (auto& v : row) v = val(rng);
  auto expected = dense_snf(m);
  auto got = smith_normal_form(to_sparse(m));
  CHECK(got.divisors == expected);
}

TEST_CASE("chain complexes") {
  SimplicialComplex edge;
  edge.vertex_count = 2;
  edge.faces = {{{0}, {1}}, {{0, 1}}};
  ChainComplex cc = chain_complex(edge);
  REQUIRE(cc.boundary.size() == 2);
  CHECK(cc.boundary[1].rows == 2);
  CHECK(cc.boundary[1].cols == 1);
  REQUIRE(cc.boundary[1].entries.size() == 2);
  CHECK(cc.boundary[1].entries[0].val + cc.boundary[1].entries[1].val == 0);

  SimplicialComplex hollow;
  hollow.vertex_count = 3;
  hollow.faces = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}};
  auto r = smith_normal_form(chain_complex(hollow).boundary[1]);
  CHECK(r.rank == 2);
  CHECK(r.divisors == std::vector<long long>{1, 1});

  SimplicialComplex broken;
  broken.vertex_count = 3;
  broken.faces = {{{0}, {1}}, {{0, 2}}};
  CHECK_THROWS_AS(chain_complex(broken), DomainError);
}

TEST_CASE("reduced homology of model spaces") {
  {  // a point
    SimplicialComplex pt;
    pt.vertex_count = 1;
    pt.faces = {{{0}}};
    CHECK(betti_of(reduced_homology(pt)).empty());
  }
  {  // the empty complex carries one class in dimension -1
    SimplicialComplex empty;
    auto h = reduced_homology(empty);
    CHECK(h.betti_at(-1) == 1);
    CHECK(h.chi_reduced == -1);
  }
  {  // boundary of the tetrahedron: a 2-sphere
    SimplicialComplex s2;
    s2.vertex_count = 4;
    s2.faces = {{{0}, {1}, {2}, {3}},
                {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    auto h = reduced_homology(s2);
    CHECK(betti_equal(betti_of(h), BettiVector{{2, 1}}));
    CHECK(h.torsion_free());
  }
  {  // the 6-vertex projective plane: torsion Z/2 in H1
    SimplicialComplex rp2;
    rp2.vertex_count = 6;
    rp2.faces.resize(3);
    for (int v = 0; v < 6; ++v) rp2.faces[0].push_back({v});
    std::vector<std::vector<int>> tris = {{0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {0, 3, 4},
                                          {0, 3, 5}, {1, 2, 3}, {1, 3, 4}, {1, 4, 5},
                                          {2, 3, 5}, {2, 4, 5}};
    std::set<std::vector<int>> edges;
    for (auto& t : tris)
      for (int drop = 0; drop < 3; ++drop) {
        std::vector<int> e = t;
        e.erase(e.begin() + drop);
        edges.insert(e);
      }
    rp2.faces[1].assign(edges.begin(), edges.end());
    std::sort(tris.begin(), tris.end());
    rp2.faces[2] = tris;
    rp2.validate();
    auto h = reduced_homology(rp2);
    CHECK(betti_of(h).empty());  // free parts vanish
    CHECK(h.torsion_at(1) == std::vector<long long>{2});
    CHECK(h.chi_reduced == 0);
  }
  {  // cones (posets with a maximum) are contractible
    auto cone = FinitePoset::from_less_pairs(4, {{0, 3}, {1, 3}, {2, 3}});
    CHECK(betti_of(reduced_homology(order_complex(cone))).empty());
  }
  {
    auto h = reduced_homology(order_complex(coset_poset(lattice_of(catalog_group("sym:3")))));
    CHECK(betti_equal(betti_of(h), BettiVector{{1, 8}}));
  }
}

TEST_CASE("euler characteristics") {
  auto v4 = order_complex(coset_poset(lattice_of(catalog_group("elem:2^2"))));
  auto [chi, chir] = euler_characteristics(v4);
  CHECK(chi == -2);
  CHECK(chir == -3);
  auto z4 = order_complex(coset_poset(lattice_of(catalog_group("cyclic:4"))));
  CHECK(euler_characteristics(z4).second == 1);
}

TEST_CASE("betti calculus") {
  BettiVector two_points{{0, 1}};
  CHECK(betti_equal(join_betti(two_points, two_points), BettiVector{{1, 1}}));  // S0*S0 = S1
  CHECK(betti_equal(suspension_betti(BettiVector{{1, 8}}), BettiVector{{2, 8}}));
  BettiVector s3{{1, 8}}, z5{{0, 4}};
  CHECK(betti_equal(join_betti(s3, z5), BettiVector{{2, 32}}));
  // The empty complex is the unit for joins.
  BettiVector empty{{-1, 1}};
  CHECK(betti_equal(join_betti(empty, s3), s3));
  CHECK(betti_equal(wedge_betti({s3, s3, BettiVector{}}), BettiVector{{1, 16}}));
  CHECK(betti_equal(sphere_betti(0, 5), BettiVector{}));
  CHECK(betti_equal(sphere_betti(1, -1), empty));
  CHECK_THROWS_AS(sphere_betti(2, -1), DomainError);
}

TEST_CASE("truncated complexes keep low homology") {
  auto cp = coset_poset(lattice_of(catalog_group("sym:4")));
  auto full = reduced_homology(order_complex(cp));
  auto trunc = reduced_homology(order_complex(cp, 2));
  CHECK(trunc.truncated);
  CHECK(trunc.reliable_dim == 1);
  for (int d = 0; d <= trunc.reliable_dim; ++d)
    CHECK(trunc.betti_at(d) == full.betti_at(d));
}

TEST_CASE("matrix interchange format") {
  SparseIntMatrix m;
  m.rows = 3;
  m.cols = 2;
  m.entries = {{0, 0, 2}, {2, 1, -5}};
  auto r = SparseIntMatrix::parse(m.serialize());
  CHECK(r.rows == 3);
  CHECK(r.entries.size() == 2);
  CHECK(r.entries[1].val == -5);
  CHECK_THROWS_AS(SparseIntMatrix::parse("oops"), ParseError);
}
