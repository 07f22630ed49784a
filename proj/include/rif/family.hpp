#pragma once

#include "rif/bitset.hpp"
#include "rif/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rif {

// k-uniform family on [n], members in canonical (lexicographic) order.
// Treated as immutable after construction: all combinators return new values.
struct KSetFamily {
  int n = 0;
  int k = 0;
  std::vector<SetBits> sets;

  std::int64_t size() const { return static_cast<std::int64_t>(sets.size()); }
};

// Degrees indexed by element; slot 0 unused.
using DegreeProfile = std::vector<std::int64_t>;

// a[i] = (#ordered pairs with |F1 ∩ F2| = k−i) / |F|, exact.
struct InnerDistribution {
  std::vector<Rat> a;
  std::int64_t family_size = 0;
};

KSetFamily make_family(int n, int k, const std::vector<std::vector<int>>& sets);

// Canonicalizes a list of bit-sets into a family (sorts, rejects duplicates).
KSetFamily make_family_from_bits(int n, int k, std::vector<SetBits> sets);

bool is_intersecting(const KSetFamily& fam);

DegreeProfile degree_profile(const KSetFamily& fam);

// Engaged with the common degree δ = k|F|/n iff the family is regular.
std::optional<std::int64_t> is_regular(const KSetFamily& fam);

// Δ(F) / min-degree, exact; 1 iff regular.
Rat irregularity_ratio(const KSetFamily& fam);

// |F| − Δ(F).
std::int64_t diversity(const KSetFamily& fam);

// Engaged with δ_s iff every s-subset of [n] lies in equally many members.
std::optional<std::int64_t> is_subset_regular(const KSetFamily& fam, int s);

InnerDistribution inner_distribution(const KSetFamily& fam);

// Entry i counts members G with |probe ∩ G| = k−i.
std::vector<std::int64_t> meet_profile(const KSetFamily& fam, const SetBits& probe);

// α(F) = k/n, the fraction of members through any fixed element of a regular family.
Rat family_ratio(const KSetFamily& fam);

} // namespace rif
