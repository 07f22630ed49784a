#pragma once

#include "rif/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rif {

// C(n−1, k−1): the maximum size of any intersecting family, regular or not.
Int ekr_bound(int n, int k);

// 3·C(n−3,k−2) + C(n−3,k−3): diversity-based cap for regular families.
Int prop1_bound(int n, int k);

// Hoffman-type bound C(n,k) / (1 + C(n−k,k)/C(n−k−s−2,k−s−2)) for
// s-subset-regular intersecting families, s odd, as an exact rational.
Rat hoffman_bound(int n, int k, int s = 1);

struct TightnessCheck {
  Rat value;        // 3k(k−1)(k−2) / (n²−3kn−n+3k²)
  bool obstruction; // true iff the value is not a positive integer
};

// Meet-count integrality at equality of the s=1 Hoffman bound.
TightnessCheck tightness_integrality_check(int n, int k, int s = 1);

// ceil(1 + k(n−k)/(k²−n)): minimum size of a regular intersecting family, 2k ≤ n < k².
Int lower_bound_regular(int n, int k);

// k²−k+1: the largest n admitting a regular k-uniform intersecting family.
Int existence_threshold(int k);
bool nonexistent(int n, int k);

// Bruck–Ryser–Chowla: true iff order ≡ 1,2 (mod 4) and order is not a sum of
// two squares, ruling out a projective plane of that order.
bool brc_obstruction(std::int64_t order);

// The strongest closed-form cap: 0 past the existence threshold, k²−k+1 at it,
// otherwise the Hoffman floor improved by δ-integrality (n | k·m).
Int general_bound(int n, int k);

enum class BoundKind { Upper, Lower, Info };

struct BoundEntry {
  std::string name;
  std::optional<Int> value;
  bool applicable = false;
  BoundKind kind = BoundKind::Info;
  std::string note;
};

struct BoundReport {
  int n = 0;
  int k = 0;
  std::vector<BoundEntry> entries;
  std::string verdict; // "Open" or "Nonexistent"
};

BoundReport bound_report(int n, int k, std::optional<int> s = std::nullopt);

} // namespace rif
