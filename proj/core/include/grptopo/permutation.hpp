#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "grptopo/errors.hpp"

namespace grptopo {

/// A permutation of {0..degree-1}, stored as its image list.
/// Composition convention: (a * b) maps x to a[b[x]] (b acts first).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }

  /// Parse disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
  /// "()" or "id" denotes the identity.
  static Permutation from_cycles(int degree, const std::string& text);

  int degree() const { return int(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation operator*(const Permutation& b) const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[b.img_[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = int(x);
    return r;
  }

  /// Multiplicative order = lcm of cycle lengths.
  long long order() const;

  /// Render in disjoint-cycle notation (1-based points); identity renders "()".
  std::string cycle_string() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  /// Direct sum acting on deg(a)+deg(b) points, a on the first block.
  static Permutation direct_sum(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> img_;
};

}  // namespace grptopo
