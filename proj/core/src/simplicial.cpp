#include "grptopo/simplicial.hpp"

#include <algorithm>
#include <sstream>

#include "grptopo/errors.hpp"

namespace grptopo {

long long SimplicialComplex::total_faces() const {
  long long t = 0;
  for (const auto& level : faces) t += (long long)level.size();
  return t;
}

void SimplicialComplex::validate() const {
  for (size_t d = 0; d < faces.size(); ++d) {
    const auto& level = faces[d];
    if (!std::is_sorted(level.begin(), level.end()))
      throw DomainError("face level " + std::to_string(d) + " is not sorted");
    if (std::adjacent_find(level.begin(), level.end()) != level.end())
      throw DomainError("duplicate face in dimension " + std::to_string(d));
    for (const auto& f : level) {
      if (int(f.size()) != int(d) + 1) throw DomainError("face size does not match dimension");
      if (!std::is_sorted(f.begin(), f.end()) ||
          std::adjacent_find(f.begin(), f.end()) != f.end())
        throw DomainError("face vertex list must be strictly increasing");
      for (int v : f)
        if (v < 0 || v >= vertex_count) throw DomainError("face vertex out of range");
      if (d == 0) continue;
      // Every facet must be present one level down.
      std::vector<int> facet(f.begin(), f.end() - 1);
      for (size_t drop = 0; drop < f.size(); ++drop) {
        facet.assign(f.begin(), f.end());
        facet.erase(facet.begin() + long(drop));
        if (!std::binary_search(faces[d - 1].begin(), faces[d - 1].end(), facet))
          throw DomainError("complex is not downward closed");
      }
    }
  }
}

std::string SimplicialComplex::serialize() const {
  std::ostringstream os;
  os << "complex " << vertex_count;
  if (truncated()) os << " truncated " << truncation_dim;
  os << "\n";
  for (size_t d = 0; d < faces.size(); ++d) {
    os << "dim " << d << "\n";
    for (const auto& f : faces[d]) {
      for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
      os << "\n";
    }
  }
  return os.str();
}

SimplicialComplex SimplicialComplex::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  SimplicialComplex k;
  if (!std::getline(in, line)) throw ParseError("empty complex text");
  {
    std::istringstream head(line);
    std::string kw;
    head >> kw >> k.vertex_count;
    if (kw != "complex" || k.vertex_count < 0)
      throw ParseError("complex text must start with 'complex n'");
    std::string trunc;
    if (head >> trunc) {
      if (trunc != "truncated") throw ParseError("bad complex header");
      head >> k.truncation_dim;
    }
  }
  int cur = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "dim") {
      ls >> cur;
      if (cur != int(k.faces.size())) throw ParseError("complex dims must be consecutive");
      k.faces.emplace_back();
      continue;
    }
    if (cur < 0) throw ParseError("face line before any 'dim' header");
    std::vector<int> f{std::stoi(first)};
    int v;
    while (ls >> v) f.push_back(v);
    k.faces[size_t(cur)].push_back(std::move(f));
  }
  k.validate();
  return k;
}

SimplicialComplex order_complex(const FinitePoset& p, int max_dim, long long max_faces) {
  SimplicialComplex k;
  k.vertex_count = p.size();
  k.vertex_labels = p.labels();
  if (max_dim >= 0) k.truncation_dim = max_dim;
  long long emitted = 0;

  std::vector<int> chain;
  // Ascending DFS emits every level in lexicographic order.
  std::function<void(int)> extend = [&](int last) {
    const Bitset& up = p.above(last);
    for (int j = up.find_first(); j >= 0; j = up.find_next(j)) {
      chain.push_back(j);
      int d = int(chain.size()) - 1;
      if (max_dim < 0 || d <= max_dim) {
        if (int(k.faces.size()) <= d) k.faces.emplace_back();
        k.faces[size_t(d)].push_back(chain);
        if (++emitted > max_faces) throw CapExceeded("order complex exceeds face cap");
        if (max_dim < 0 || d < max_dim) extend(j);
      }
      chain.pop_back();
    }
  };
  for (int i = 0; i < p.size(); ++i) {
    chain.assign(1, i);
    if (k.faces.empty()) k.faces.emplace_back();
    k.faces[0].push_back(chain);
    if (++emitted > max_faces) throw CapExceeded("order complex exceeds face cap");
    extend(i);
  }
  if (p.size() == 0) k.faces.clear();
  return k;
}

}  // namespace grptopo
