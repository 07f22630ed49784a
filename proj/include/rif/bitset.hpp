#pragma once

#include <cstdint>
#include <vector>

namespace rif {

// Subset of [n] = {1..n} as a bit-set. Bit 0 is unused; elements are 1-indexed.
class SetBits {
 public:
  SetBits() = default;
  explicit SetBits(int n) : n_(n), w_((n + 64) / 64, 0) {}

  static SetBits of(int n, const std::vector<int>& elems);

  int ground_size() const { return n_; }

  void set(int x) { w_[x >> 6] |= std::uint64_t(1) << (x & 63); }
  void reset(int x) { w_[x >> 6] &= ~(std::uint64_t(1) << (x & 63)); }
  bool test(int x) const { return (w_[x >> 6] >> (x & 63)) & 1; }

  int count() const;
  bool empty() const;
  bool intersects(const SetBits& o) const;
  int intersection_count(const SetBits& o) const;
  bool is_subset_of(const SetBits& o) const;

  std::vector<int> elements() const;

  bool operator==(const SetBits& o) const { return w_ == o.w_; }

  // Lexicographic order on the sorted element lists ({1,5} before {2,3}).
  static bool lex_less(const SetBits& a, const SetBits& b);

  std::size_t hash() const;

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct SetBitsHash {
  std::size_t operator()(const SetBits& s) const { return s.hash(); }
};

} // namespace rif
