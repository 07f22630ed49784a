#pragma once

#include "rif/family.hpp"

#include <cstdint>
#include <vector>

namespace rif {

// Lines of PG(2,q): the regular intersecting family meeting the existence
// threshold at n = q²+q+1, k = q+1.
KSetFamily projective_plane(int q);

// F^l: all (k+l)-supersets of members within the same ground set.
// Needs l < min |F1 ∖ F2| over distinct member pairs.
KSetFamily extend_family(const KSetFamily& fam, int l);

// F+G on disjoint ground sets (G relabeled to [n1+1..n1+n2]); requires equal ratios.
KSetFamily disjoint_sum(const KSetFamily& fam_f, const KSetFamily& fam_g);

// F×F2 with point (x,y) ↦ (x−1)·n2 + y.
KSetFamily product_family(const KSetFamily& f1, const KSetFamily& f2);

// All m-subsets of [z].
KSetFamily complete_uniform(int z, int m);

// projective_plane(q) + complete_uniform(l(q²+q+1), l(q+1)): regular
// intersecting with ratio (q+1)/(q²+q+1) and size Θ of the EKR bound.
KSetFamily prop3_construction(int q, int l);

// Target for the n=2k half-family balancing: a (k−1)-uniform family on [2k−1]
// avoiding the exception sets and meeting target_profile exactly.
struct HalfFamilySpec {
  int k = 0;
  std::vector<std::vector<int>> exceptions;  // (k−1)-subsets of [2k−1], each containing 2k−1
  std::vector<std::int64_t> target_profile;  // degree per element; slot 0 unused
};

// Builds the half family by (g,h)-replacements: all-through-(2k−1) core minus
// exceptions, greedy colex fill of the [2k−2] layer, balancing swaps, then
// transfers of the excess degree of 2k−1 until the profile is exact.
KSetFamily balanced_half_family(const HalfFamilySpec& spec);

// F(2k) ∪ bar F(2k) minus removals: {2k}∪Q for Q in the half family, plus every
// k-subset of [2k−1] whose complement within [2k−1] is not in the half family.
KSetFamily fold_to_intersecting(const KSetFamily& half, int k,
                                const std::vector<std::vector<int>>& removals);

// Largest regular intersecting family on [2k] for k not a power of 2: size C(2k−1,k).
KSetFamily brace_daykin(int k);

// Largest regular intersecting family on [2k] for k ≥ 4 a power of 2: size C(2k−1,k)−3.
KSetFamily neq2k_construction(int k);

} // namespace rif
