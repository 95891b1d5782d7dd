#pragma once

#include <cstdint>
#include <vector>

namespace harmonic {

// Fixed-capacity bitset over point indices 0..n-1.
class PointSet {
public:
  PointSet() = default;
  explicit PointSet(int n) : n_(n), words_((size_t(n) + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) { words_[size_t(i) >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { words_[size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (words_[size_t(i) >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const PointSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const PointSet& o) const { return !(*this == o); }

  PointSet& operator|=(const PointSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  bool subset_of(const PointSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size_t(count()));
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(int(wi * 64) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  static PointSet of(int n, const std::vector<int>& ids) {
    PointSet s(n);
    for (int i : ids) s.set(i);
    return s;
  }

  static PointSet full(int n) {
    PointSet s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace harmonic
