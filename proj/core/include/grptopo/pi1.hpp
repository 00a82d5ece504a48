#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grptopo/subgroup_lattice.hpp"

namespace grptopo {

/// Edge-path presentation of pi1 of the minimal-cover 2-skeleton: one vertex
/// per group element, a generator per ordered edge, relations from the
/// spanning tree, inverse pairs, and the 2-simplices. Edges and triangles are
/// answered from per-element masks over the maximal subgroups: {u,v} is an
/// edge iff u^-1 v avoids generating, and {u,v,w} spans a simplex iff some
/// maximal subgroup contains both u^-1 v and u^-1 w.
class EdgePresentation {
 public:
  static EdgePresentation standard(const Group& g, long long order_cap = kDefaultOrderCap);
  /// BFS spanning tree; also valid for cyclic groups whose identity star is
  /// incomplete.
  static EdgePresentation with_bfs_tree(const Group& g,
                                        long long order_cap = kDefaultOrderCap);

  const Group& group() const { return g_; }
  int vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& tree_edges() const { return tree_; }

  bool edge(int u, int v) const {
    return u != v && mask_any(g_.mul(g_.inv(u), v));
  }
  bool triangle(int u, int v, int w) const {
    return u != v && u != w && v != w &&
           mask_intersect(g_.mul(g_.inv(u), v), g_.mul(g_.inv(u), w));
  }
  long long edge_count() const;

 private:
  EdgePresentation(const Group& g, long long order_cap);
  bool mask_any(int e) const {
    for (int w = 0; w < words_; ++w)
      if (mask_[size_t(e) * size_t(words_) + size_t(w)]) return true;
    return false;
  }
  bool mask_intersect(int a, int b) const {
    for (int w = 0; w < words_; ++w)
      if (mask_[size_t(a) * size_t(words_) + size_t(w)] &
          mask_[size_t(b) * size_t(words_) + size_t(w)])
        return true;
    return false;
  }

  Group g_;
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> mask_;  // element x maximal-subgroup incidence
  std::vector<std::pair<int, int>> tree_;
};

struct DerivationStep {
  int u = 0, v = 0;  // derived edge
  int w = 0;         // pivot: triangle {u,v,w} with {u,w}, {w,v} already trivial
};

/// Replayable proof that edge generators are trivial.
struct TrivialityCertificate {
  std::vector<DerivationStep> steps;

  /// One line per derivation: "(u,v) <- triangle(u,v,w) using (u,w) (w,v)".
  std::string serialize() const;
  static TrivialityCertificate parse(const std::string& text);
};

struct PropagationResult {
  bool complete = false;  // every edge generator proved trivial
  std::optional<TrivialityCertificate> certificate;
  long long edge_count = 0;
  long long trivial_count = 0;
  std::vector<std::pair<int, int>> residual_sample;  // first untriviable edges
};

/// Fixpoint of: an edge becomes trivial when it closes a 2-simplex against
/// two trivial edges. Seeded by the spanning tree. Deterministic worklist
/// order; a full fixpoint yields a simple-connectivity certificate for the
/// minimal cover (and hence for the coset complex). A nonzero shuffle_seed
/// permutes the processing order; the final set is order-insensitive.
PropagationResult propagate_triviality(const EdgePresentation& p, unsigned shuffle_seed = 0);

/// Re-derives every step from the tree alone and confirms the claimed
/// fixpoint covers all edges.
bool replay_certificate(const EdgePresentation& p, const TrivialityCertificate& cert);

struct Condition2Result {
  bool pass = false;
  long long generating_pairs = 0;
  std::vector<std::pair<int, int>> failures;  // pairs with no witness (sample)
  std::vector<std::tuple<int, int, int>> witness_sample;  // (x, y, z)
};

/// For each generating pair (x,y), searches z with <z,x>, <z,y>, and
/// <z^-1 x, z^-1 y> all proper. A pass certifies simple connectivity.
Condition2Result condition2_search(const Group& g, long long order_cap = kDefaultOrderCap);

struct NLocalResult {
  bool pass = false;
  long long edges_with_order_n_endpoint = 0;
  std::vector<std::pair<int, int>> residual_sample;
};

/// Propagation restricted goal: every edge with an order-n endpoint trivial.
NLocalResult n_local_check(const Group& g, long long n,
                           long long order_cap = kDefaultOrderCap);

}  // namespace grptopo
