#include "grptopo/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grptopo {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= int(img_.size()) || seen[v])
      throw DomainError("permutation image list is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::from_cycles(int degree, const std::string& text) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "id") == 0) return Permutation(img);
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw ParseError("expected point number in cycle: " + text);
      int p = std::stoi(text.substr(pos, end - pos));
      if (p < 1 || p > degree)
        throw ParseError("point " + std::to_string(p) + " out of range 1.." +
                         std::to_string(degree));
      cyc.push_back(p - 1);
      pos = end;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (img[from] != from && cyc.size() > 1)
        throw ParseError("point repeated across cycles: " + text);
      if (cyc.size() > 1) img[from] = to;
    }
  }
  return Permutation(img);
}

long long Permutation::order() const {
  std::vector<char> seen(img_.size(), 0);
  long long ord = 1;
  for (int s = 0; s < degree(); ++s) {
    if (seen[s]) continue;
    long long len = 0;
    for (int x = s; !seen[x]; x = img_[x]) {
      seen[x] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::vector<char> seen(img_.size(), 0);
  std::ostringstream os;
  bool wrote = false;
  for (int s = 0; s < degree(); ++s) {
    if (seen[s] || img_[s] == s) {
      seen[s] = 1;
      continue;
    }
    os << '(';
    bool first = true;
    for (int x = s; !seen[x]; x = img_[x]) {
      seen[x] = 1;
      if (!first) os << ' ';
      os << (x + 1);
      first = false;
    }
    os << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return os.str();
}

Permutation Permutation::direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> img(a.degree() + b.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + b[i];
  return Permutation(img);
}

}  // namespace grptopo
