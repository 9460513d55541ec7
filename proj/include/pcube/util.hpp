#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pcube {

// Fixed-capacity bitset sized at construction. Vertex sets at desk scale
// are at most a few hundred bits, so a short word vector is enough.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool intersects(const BitVec& o) const {
    size_t k = std::min(w_.size(), o.w_.size());
    for (size_t i = 0; i < k; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  int intersect_count(const BitVec& o) const {
    size_t k = std::min(w_.size(), o.w_.size());
    int c = 0;
    for (size_t i = 0; i < k; ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  bool is_subset_of(const BitVec& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~(i < o.w_.size() ? o.w_[i] : 0)) return false;
    return true;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Disjoint-set union for edge-class merging.
class Dsu {
 public:
  explicit Dsu(int n) : p_(n) {
    for (int i = 0; i < n; ++i) p_[i] = i;
  }
  int find(int x) {
    while (p_[x] != x) x = p_[x] = p_[p_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> p_;
};

}  // namespace pcube
