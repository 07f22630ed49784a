#include "rif/bitset.hpp"

#include "rif/error.hpp"

#include <bit>
#include <string>

namespace rif {

SetBits SetBits::of(int n, const std::vector<int>& elems) {
  SetBits s(n);
  for (int x : elems) {
    if (x < 1 || x > n)
      throw Error(ErrorCode::ElementOutOfRange,
                  "element " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
    s.set(x);
  }
  return s;
}

int SetBits::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool SetBits::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool SetBits::intersects(const SetBits& o) const {
  const std::size_t m = std::min(w_.size(), o.w_.size());
  for (std::size_t i = 0; i < m; ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

int SetBits::intersection_count(const SetBits& o) const {
  const std::size_t m = std::min(w_.size(), o.w_.size());
  int c = 0;
  for (std::size_t i = 0; i < m; ++i) c += std::popcount(w_[i] & o.w_[i]);
  return c;
}

bool SetBits::is_subset_of(const SetBits& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    const std::uint64_t other = i < o.w_.size() ? o.w_[i] : 0;
    if (w_[i] & ~other) return false;
  }
  return true;
}

std::vector<int> SetBits::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t w = w_[i];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(int(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

bool SetBits::lex_less(const SetBits& a, const SetBits& b) {
  // Smallest differing element decides, so scan words low-to-high and within a
  // word compare the lowest differing bit.
  const std::size_t m = std::max(a.w_.size(), b.w_.size());
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t wa = i < a.w_.size() ? a.w_[i] : 0;
    const std::uint64_t wb = i < b.w_.size() ? b.w_[i] : 0;
    const std::uint64_t diff = wa ^ wb;
    if (diff) {
      const std::uint64_t low = diff & (~diff + 1);
      return (wa & low) != 0; // a holds the smaller element
    }
  }
  return false;
}

std::size_t SetBits::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : w_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace rif
