#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace grptopo {

/// Fixed-size dynamic bitset used for element/subgroup/poset membership masks.
/// All binary operations require equal sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// First set bit, or -1.
  int find_first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
    return -1;
  }

  /// First set bit at index > i, or -1.
  int find_next(int i) const {
    ++i;
    if (i >= nbits_) return -1;
    size_t k = size_t(i) >> 6;
    uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(k * 64 + std::countr_zero(w));
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& andnot(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool operator<(const Bitset& o) const { return w_ < o.w_; }

  /// True if *this is a subset of o.
  bool subset_of(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
    return out;
  }

  static Bitset from_indices(int nbits, const std::vector<int>& idx) {
    Bitset b(nbits);
    for (int i : idx) b.set(i);
    return b;
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ULL;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace grptopo
