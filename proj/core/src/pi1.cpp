#include "grptopo/pi1.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "grptopo/errors.hpp"

namespace grptopo {

EdgePresentation::EdgePresentation(const Group& g, long long order_cap) : g_(g) {
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  n_ = int(g.order());
  const auto& maxima = lat.maximal_ids();
  words_ = std::max(1, (int(maxima.size()) + 63) / 64);
  mask_.assign(size_t(n_) * size_t(words_), 0);
  for (size_t mi = 0; mi < maxima.size(); ++mi) {
    const Bitset& mem = lat.sub(maxima[mi]).mask;
    for (int e = mem.find_first(); e >= 0; e = mem.find_next(e))
      mask_[size_t(e) * size_t(words_) + (mi >> 6)] |= (uint64_t{1} << (mi & 63));
  }
}

EdgePresentation EdgePresentation::standard(const Group& g, long long order_cap) {
  EdgePresentation p(g, order_cap);
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  if (lat.is_cyclic(lat.full_id()))
    throw DomainError("standard presentation needs a non-cyclic group (star tree at 1)");
  for (int v = 1; v < p.n_; ++v) p.tree_.emplace_back(0, v);
  return p;
}

EdgePresentation EdgePresentation::with_bfs_tree(const Group& g, long long order_cap) {
  EdgePresentation p(g, order_cap);
  std::vector<char> seen(size_t(p.n_), 0);
  std::deque<int> work{0};
  seen[0] = 1;
  int reached = 1;
  while (!work.empty()) {
    int u = work.front();
    work.pop_front();
    for (int v = 0; v < p.n_; ++v) {
      if (seen[size_t(v)] || !p.edge(u, v)) continue;
      seen[size_t(v)] = 1;
      ++reached;
      p.tree_.emplace_back(std::min(u, v), std::max(u, v));
      work.push_back(v);
    }
  }
  if (reached != p.n_)
    throw DomainError("minimal cover 1-skeleton is disconnected; no spanning tree");
  return p;
}

long long EdgePresentation::edge_count() const {
  long long c = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (edge(u, v)) ++c;
  return c;
}

std::string TrivialityCertificate::serialize() const {
  std::ostringstream os;
  for (const auto& s : steps)
    os << "(" << s.u << "," << s.v << ") <- triangle(" << s.u << "," << s.v << "," << s.w
       << ") using (" << s.u << "," << s.w << ") (" << s.w << "," << s.v << ")\n";
  return os.str();
}

TrivialityCertificate TrivialityCertificate::parse(const std::string& text) {
  TrivialityCertificate cert;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    DerivationStep s;
    int tu, tv, tw, au, aw, bw, bv;
    if (std::sscanf(line.c_str(),
                    "(%d,%d) <- triangle(%d,%d,%d) using (%d,%d) (%d,%d)", &s.u, &s.v, &tu,
                    &tv, &tw, &au, &aw, &bw, &bv) != 9)
      throw ParseError("bad certificate line: " + line);
    if (tu != s.u || tv != s.v || au != s.u || aw != tw || bw != tw || bv != s.v)
      throw ParseError("inconsistent certificate line: " + line);
    s.w = tw;
    cert.steps.push_back(s);
  }
  return cert;
}

namespace {

/// Unordered edge marks; setting {u,v} also covers the inverse generator.
struct EdgeSet {
  int n;
  std::vector<char> bits;
  explicit EdgeSet(int n_) : n(n_), bits(size_t(n_) * size_t(n_), 0) {}
  bool test(int u, int v) const { return bits[size_t(u) * size_t(n) + size_t(v)]; }
  void set(int u, int v) {
    bits[size_t(u) * size_t(n) + size_t(v)] = 1;
    bits[size_t(v) * size_t(n) + size_t(u)] = 1;
  }
};

struct Fixpoint {
  EdgeSet trivial;
  TrivialityCertificate cert;
  long long trivial_count = 0;
};

Fixpoint propagate_fixpoint(const EdgePresentation& p, unsigned shuffle_seed) {
  const int n = p.vertices();
  const Group& g = p.group();
  Fixpoint fx{EdgeSet(n), {}, 0};

  std::vector<std::pair<int, int>> seed = p.tree_edges();
  std::stable_sort(seed.begin(), seed.end(), [&](auto a, auto b) {
    long long oa = std::min(g.element_order(a.first), g.element_order(a.second));
    long long ob = std::min(g.element_order(b.first), g.element_order(b.second));
    if (oa != ob) return oa < ob;
    return a < b;
  });
  if (shuffle_seed != 0) {
    std::mt19937 rng(shuffle_seed);
    std::shuffle(seed.begin(), seed.end(), rng);
  }
  std::deque<std::pair<int, int>> work;
  for (auto [u, v] : seed) {
    if (!p.edge(u, v)) throw DomainError("tree edge missing from the 1-skeleton");
    if (!fx.trivial.test(u, v)) {
      fx.trivial.set(u, v);
      ++fx.trivial_count;
      work.emplace_back(u, v);
    }
  }
  std::mt19937 rng(shuffle_seed);
  while (!work.empty()) {
    std::pair<int, int> cur;
    if (shuffle_seed == 0) {
      cur = work.front();
      work.pop_front();
    } else {
      size_t pick = rng() % work.size();
      cur = work[pick];
      work[pick] = work.back();
      work.pop_back();
    }
    auto [a, b] = cur;
    for (int w = 0; w < n; ++w) {
      if (w == a || w == b) continue;
      if (fx.trivial.test(b, w) && !fx.trivial.test(a, w) && p.triangle(a, w, b)) {
        fx.trivial.set(a, w);
        ++fx.trivial_count;
        fx.cert.steps.push_back({a, w, b});
        work.emplace_back(a, w);
      }
      if (fx.trivial.test(a, w) && !fx.trivial.test(b, w) && p.triangle(b, w, a)) {
        fx.trivial.set(b, w);
        ++fx.trivial_count;
        fx.cert.steps.push_back({b, w, a});
        work.emplace_back(b, w);
      }
    }
  }
  return fx;
}

}  // namespace

PropagationResult propagate_triviality(const EdgePresentation& p, unsigned shuffle_seed) {
  PropagationResult out;
  out.edge_count = p.edge_count();
  Fixpoint fx = propagate_fixpoint(p, shuffle_seed);
  out.trivial_count = fx.trivial_count;
  out.complete = (fx.trivial_count == out.edge_count);
  if (out.complete) {
    out.certificate = std::move(fx.cert);
  } else {
    const int n = p.vertices();
    for (int u = 0; u < n && int(out.residual_sample.size()) < 16; ++u)
      for (int v = u + 1; v < n && int(out.residual_sample.size()) < 16; ++v)
        if (p.edge(u, v) && !fx.trivial.test(u, v)) out.residual_sample.emplace_back(u, v);
  }
  return out;
}

bool replay_certificate(const EdgePresentation& p, const TrivialityCertificate& cert) {
  const int n = p.vertices();
  EdgeSet trivial(n);
  long long count = 0;
  for (auto [u, v] : p.tree_edges()) {
    if (!p.edge(u, v)) return false;
    if (!trivial.test(u, v)) {
      trivial.set(u, v);
      ++count;
    }
  }
  for (const auto& s : cert.steps) {
    if (!p.triangle(s.u, s.v, s.w)) return false;
    if (!trivial.test(s.u, s.w) || !trivial.test(s.w, s.v)) return false;
    if (trivial.test(s.u, s.v)) return false;  // steps must be productive
    trivial.set(s.u, s.v);
    ++count;
  }
  return count == p.edge_count();
}

Condition2Result condition2_search(const Group& g, long long order_cap) {
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  if (lat.is_cyclic(lat.full_id()))
    throw DomainError("condition (2) search needs a non-cyclic group");
  EdgePresentation p = EdgePresentation::standard(g, order_cap);
  const int n = int(g.order());

  Condition2Result out;
  out.pass = true;
  for (int x = 1; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      // triangle(0, x, y) holds iff <x,y> lies in a maximal subgroup.
      if (p.triangle(0, x, y)) continue;
      ++out.generating_pairs;
      bool found = false;
      for (int z = 1; z < n && !found; ++z) {
        if (z == x || z == y) continue;
        if (p.triangle(0, z, x) && p.triangle(0, z, y) && p.triangle(z, x, y)) {
          found = true;
          if (out.witness_sample.size() < 8) out.witness_sample.emplace_back(x, y, z);
        }
      }
      if (!found) {
        out.pass = false;
        if (out.failures.size() < 16) out.failures.emplace_back(x, y);
      }
    }
  return out;
}

NLocalResult n_local_check(const Group& g, long long n_order, long long order_cap) {
  const SubgroupLattice& lat = lattice_of(g, order_cap);
  bool has = false;
  for (int e = 1; e < int(g.order()); ++e)
    if (g.element_order(e) == n_order) {
      has = true;
      break;
    }
  if (!has) throw DomainError("group has no element of order " + std::to_string(n_order));

  EdgePresentation p = lat.is_cyclic(lat.full_id())
                           ? EdgePresentation::with_bfs_tree(g, order_cap)
                           : EdgePresentation::standard(g, order_cap);
  Fixpoint fx = propagate_fixpoint(p, 0);

  NLocalResult out;
  out.pass = true;
  const int n = int(g.order());
  for (int u = 0; u < n; ++u) {
    bool u_n = g.element_order(u) == n_order;
    for (int v = u + 1; v < n; ++v) {
      if (!u_n && g.element_order(v) != n_order) continue;
      if (!p.edge(u, v)) continue;
      ++out.edges_with_order_n_endpoint;
      if (!fx.trivial.test(u, v)) {
        out.pass = false;
        if (out.residual_sample.size() < 16) out.residual_sample.emplace_back(u, v);
      }
    }
  }
  return out;
}

}  // namespace grptopo
