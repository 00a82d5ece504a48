#include "grptopo/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "grptopo/errors.hpp"
#include "grptopo/psl2.hpp"

namespace grptopo {

namespace {

long long parse_ll(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("trailing characters in " + what + ": " + s);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("expected integer for " + what + ": " + s);
  }
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Group make_cyclic(long long n) {
  if (n < 1 || n > kMaxEnumeratedOrder) throw ParseError("cyclic:n out of range");
  std::vector<int> img((size_t)n);
  for (long long i = 0; i < n; ++i) img[size_t(i)] = int((i + 1) % n);
  return Group::from_generators(int(n), {Permutation(img)}, "cyclic:" + std::to_string(n));
}

Group make_elementary(long long p, long long k) {
  if (!is_prime(p) || k < 1 || k > 16) throw ParseError("elem:p^k needs prime p, 1<=k<=16");
  std::vector<Permutation> gens;
  int degree = int(p * k);
  for (long long block = 0; block < k; ++block) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (long long i = 0; i < p; ++i)
      img[size_t(block * p + i)] = int(block * p + (i + 1) % p);
    gens.emplace_back(img);
  }
  return Group::from_generators(degree, gens,
                                "elem:" + std::to_string(p) + "^" + std::to_string(k));
}

Group make_dihedral(long long n) {
  if (n < 3) throw ParseError("dihedral:n needs n >= 3 (use elem:2^2 for the Klein group)");
  std::vector<int> rot((size_t)n), refl((size_t)n);
  for (long long i = 0; i < n; ++i) {
    rot[size_t(i)] = int((i + 1) % n);
    refl[size_t(i)] = int((n - i) % n);
  }
  return Group::from_generators(int(n), {Permutation(rot), Permutation(refl)},
                                "dihedral:" + std::to_string(n));
}

Group make_dicyclic(long long n) {
  if (n < 2) throw ParseError("dicyclic:n needs n >= 2");
  // Points 0..2n-1 are powers a^k, points 2n..4n-1 are b*a^k.
  int m = int(2 * n);
  std::vector<int> a(size_t(4 * n)), b(size_t(4 * n));
  for (int k = 0; k < m; ++k) {
    a[size_t(k)] = (k + 1) % m;
    a[size_t(m + k)] = m + ((k - 1 + m) % m);
    b[size_t(k)] = m + k;
    b[size_t(m + k)] = int((n + k) % m);
  }
  return Group::from_generators(int(4 * n), {Permutation(a), Permutation(b)},
                                "dicyclic:" + std::to_string(n));
}

Group make_symmetric(long long n) {
  if (n < 2) throw ParseError("sym:n needs n >= 2");
  std::vector<int> swap01((size_t)n), cyc((size_t)n);
  std::iota(swap01.begin(), swap01.end(), 0);
  swap01[0] = 1;
  swap01[1] = 0;
  for (long long i = 0; i < n; ++i) cyc[size_t(i)] = int((i + 1) % n);
  return Group::from_generators(int(n), {Permutation(swap01), Permutation(cyc)},
                                "sym:" + std::to_string(n));
}

Group make_alternating(long long n) {
  if (n < 3) throw ParseError("alt:n needs n >= 3");
  std::vector<int> three((size_t)n), big((size_t)n);
  std::iota(three.begin(), three.end(), 0);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::iota(big.begin(), big.end(), 0);
  if (n % 2 == 1) {
    for (long long i = 0; i < n; ++i) big[size_t(i)] = int((i + 1) % n);
  } else {
    for (long long i = 1; i < n; ++i) big[size_t(i)] = int(i % (n - 1) + 1);
  }
  return Group::from_generators(int(n), {Permutation(three), Permutation(big)},
                                "alt:" + std::to_string(n));
}

/// Splits "A,B" at the first comma where the prefix is itself a valid spec.
std::pair<std::string, std::string> split_product(const std::string& body) {
  size_t pos = 0;
  while (true) {
    pos = body.find(',', pos);
    if (pos == std::string::npos) throw ParseError("product needs two comma-separated specs");
    std::string head = body.substr(0, pos);
    try {
      (void)catalog_group(head);
      return {head, body.substr(pos + 1)};
    } catch (const ParseError&) {
      ++pos;  // comma belonged to the first spec; try the next one
    }
  }
}

}  // namespace

Group catalog_group(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("unknown group spec: " + spec);
  std::string tag = spec.substr(0, colon);
  std::string body = spec.substr(colon + 1);

  if (tag == "cyclic") return make_cyclic(parse_ll(body, "cyclic order"));
  if (tag == "elem") {
    auto caret = body.find('^');
    if (caret == std::string::npos) throw ParseError("elem spec needs p^k: " + spec);
    return make_elementary(parse_ll(body.substr(0, caret), "prime"),
                           parse_ll(body.substr(caret + 1), "exponent"));
  }
  if (tag == "dihedral") return make_dihedral(parse_ll(body, "dihedral n"));
  if (tag == "dicyclic") return make_dicyclic(parse_ll(body, "dicyclic n"));
  if (tag == "sym") return make_symmetric(parse_ll(body, "sym n"));
  if (tag == "alt") return make_alternating(parse_ll(body, "alt n"));
  if (tag == "psl2") {
    long long p = parse_ll(body, "psl2 prime");
    if (!is_prime(p) || p == 2 || p > 13)
      throw ParseError("psl2:p needs an odd prime p <= 13");
    return psl2_model(int(p)).group;
  }
  if (tag == "product") {
    auto [a, b] = split_product(body);
    Group ga = catalog_group(a);
    Group gb = catalog_group(b);
    std::vector<Permutation> gens;
    Permutation idb = Permutation::identity(gb.degree());
    Permutation ida = Permutation::identity(ga.degree());
    for (int i : ga.generator_indices())
      gens.push_back(Permutation::direct_sum(ga.perm(i), idb));
    for (int i : gb.generator_indices())
      gens.push_back(Permutation::direct_sum(ida, gb.perm(i)));
    return Group::from_generators(ga.degree() + gb.degree(), gens, spec);
  }
  if (tag == "semidirect") return build_semidirect(parse_semidirect_file(body), spec);
  if (tag == "file") {
    Group g = parse_group_file(body);
    return g;
  }
  throw ParseError("unknown group spec tag: " + tag);
}

Group build_semidirect(const SemidirectSpec& spec, const std::string& name) {
  const Group& h = spec.normal;
  const Group& k = spec.acting;
  const auto& hgens = h.generator_indices();
  const auto& kgens = k.generator_indices();
  if (spec.twist.size() != kgens.size())
    throw ParseError("semidirect: need one twist row per acting generator");
  const int hn = int(h.order());

  // Extend each generator twist to an automorphism of the whole normal group
  // by following the right-multiplication closure that enumerated it.
  auto extend = [&](const std::vector<Permutation>& images) {
    if (images.size() != hgens.size())
      throw ParseError("semidirect: need one image per normal generator");
    std::vector<int> phi(size_t(hn), -1);
    phi[0] = 0;
    std::vector<int> gen_image(hgens.size());
    for (size_t j = 0; j < hgens.size(); ++j) {
      int idx = h.index_of(images[j]);
      if (idx < 0) throw ParseError("semidirect: twist image is not in the normal group");
      gen_image[j] = idx;
    }
    std::vector<int> work{0};
    for (size_t w = 0; w < work.size(); ++w) {
      for (size_t j = 0; j < hgens.size(); ++j) {
        int x = work[w], y = h.mul(x, hgens[j]);
        int img = h.mul(phi[size_t(x)], gen_image[j]);
        if (phi[size_t(y)] < 0) {
          phi[size_t(y)] = img;
          work.push_back(y);
        } else if (phi[size_t(y)] != img) {
          throw ParseError("semidirect: twist does not define a homomorphism");
        }
      }
    }
    std::vector<char> hit(size_t(hn), 0);
    for (int v : phi) {
      if (v < 0) throw ParseError("semidirect: twist extension incomplete");
      hit[size_t(v)] = 1;
    }
    for (char c : hit)
      if (!c) throw ParseError("semidirect: twist is not a bijection");
    for (int x = 0; x < hn; ++x)
      for (int y = 0; y < hn; ++y)
        if (phi[size_t(h.mul(x, y))] != h.mul(phi[size_t(x)], phi[size_t(y)]))
          throw ParseError("semidirect: twist is not an automorphism");
    return phi;
  };

  std::vector<std::vector<int>> phi_gen;
  for (const auto& row : spec.twist) phi_gen.push_back(extend(row));

  const int degree = hn + k.degree();
  std::vector<Permutation> gens;
  for (int hg : hgens) {
    std::vector<int> img((size_t)degree);
    for (int x = 0; x < hn; ++x) img[size_t(x)] = h.mul(hg, x);
    for (int x = 0; x < k.degree(); ++x) img[size_t(hn + x)] = hn + x;
    gens.emplace_back(img);
  }
  for (size_t j = 0; j < kgens.size(); ++j) {
    std::vector<int> img((size_t)degree);
    for (int x = 0; x < hn; ++x) img[size_t(x)] = phi_gen[j][size_t(x)];
    const Permutation& kp = k.perm(kgens[j]);
    for (int x = 0; x < k.degree(); ++x) img[size_t(hn + x)] = hn + kp[x];
    gens.emplace_back(img);
  }
  Group g = Group::from_generators(degree, gens, name);
  if (g.order() != h.order() * k.order())
    throw ParseError("semidirect: product order mismatch (twist not an action?)");
  return g;
}

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    line = line.substr(start);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

Group parse_group_file(const std::string& path) {
  auto lines = read_lines(path);
  if (lines.empty()) throw ParseError("empty group file: " + path);
  std::istringstream head(lines[0]);
  std::string kw;
  int degree = 0;
  head >> kw >> degree;
  if (kw != "degree" || degree < 1) throw ParseError("group file must start with 'degree n'");
  std::vector<Permutation> gens;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string gkw;
    ls >> gkw;
    if (gkw != "gen") throw ParseError("expected 'gen <cycles>', got: " + lines[i]);
    std::string rest;
    std::getline(ls, rest);
    gens.push_back(Permutation::from_cycles(degree, rest));
  }
  if (gens.empty()) throw ParseError("group file has no generators: " + path);
  return Group::from_generators(degree, gens, "file:" + path);
}

SemidirectSpec parse_semidirect_file(const std::string& path) {
  auto lines = read_lines(path);
  int ndeg = 0, adeg = 0;
  std::vector<std::string> ngens, agens;
  std::vector<std::tuple<int, int, std::string>> twists;
  for (const auto& line : lines) {
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "normal-degree") ls >> ndeg;
    else if (kw == "acting-degree") ls >> adeg;
    else if (kw == "normal-gen" || kw == "acting-gen") {
      std::string rest;
      std::getline(ls, rest);
      (kw[0] == 'n' ? ngens : agens).push_back(rest);
    } else if (kw == "twist") {
      int ai = 0, ni = 0;
      ls >> ai >> ni;
      std::string rest;
      std::getline(ls, rest);
      twists.emplace_back(ai, ni, rest);
    } else {
      throw ParseError("unknown semidirect file line: " + line);
    }
  }
  if (ndeg < 1 || adeg < 1 || ngens.empty() || agens.empty())
    throw ParseError("semidirect file needs normal-degree/-gen and acting-degree/-gen");

  SemidirectSpec spec;
  std::vector<Permutation> np, ap;
  for (const auto& s : ngens) np.push_back(Permutation::from_cycles(ndeg, s));
  for (const auto& s : agens) ap.push_back(Permutation::from_cycles(adeg, s));
  spec.normal = Group::from_generators(ndeg, np, "normal");
  spec.acting = Group::from_generators(adeg, ap, "acting");
  spec.twist.assign(agens.size(), std::vector<Permutation>(ngens.size()));
  std::vector<std::vector<char>> seen(agens.size(), std::vector<char>(ngens.size(), 0));
  for (auto& [ai, ni, text] : twists) {
    if (ai < 1 || ai > int(agens.size()) || ni < 1 || ni > int(ngens.size()))
      throw ParseError("twist indices out of range (1-based)");
    spec.twist[size_t(ai - 1)][size_t(ni - 1)] = Permutation::from_cycles(ndeg, text);
    seen[size_t(ai - 1)][size_t(ni - 1)] = 1;
  }
  for (const auto& row : seen)
    for (char c : row)
      if (!c) throw ParseError("semidirect file is missing a twist entry");
  return spec;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"cyclic:2", "Z2", true},
      {"cyclic:3", "Z3", true},
      {"cyclic:4", "Z4", true},
      {"cyclic:5", "Z5", true},
      {"cyclic:6", "Z6", true},
      {"cyclic:8", "Z8", true},
      {"cyclic:9", "Z9", true},
      {"elem:2^2", "Z2xZ2", true},
      {"elem:2^3", "Z2^3", true},
      {"elem:3^2", "Z3xZ3", true},
      {"product:cyclic:2,cyclic:4", "Z2xZ4", true},
      {"sym:3", "S3", true},
      {"dihedral:4", "D4", true},
      {"dicyclic:2", "Q8", true},
      {"dihedral:5", "D10", true},
      {"alt:4", "A4", true},
      {"sym:4", "S4", true},
      {"product:sym:3,cyclic:5", "S3xZ5", true},
      {"product:sym:3,sym:3", "S3xS3", true},
      {"alt:5", "A5", true},
      {"sym:5", "S5", false},
      {"product:alt:5,cyclic:2", "A5xZ2", false},
      {"psl2:7", "PSL(2,7)", false},
  };
  return entries;
}

}  // namespace grptopo
