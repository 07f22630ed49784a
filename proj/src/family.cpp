#include "rif/family.hpp"

#include "rif/combinatorics.hpp"
#include "rif/error.hpp"

#include <algorithm>
#include <string>

namespace rif {

namespace {

std::string set_str(const SetBits& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

void require_nonempty(const KSetFamily& fam) {
  if (fam.sets.empty()) throw Error(ErrorCode::EmptyFamily, "operation needs a nonempty family");
}

} // namespace

KSetFamily make_family_from_bits(int n, int k, std::vector<SetBits> sets) {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorCode::InvalidParameters,
                "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  for (const auto& s : sets)
    if (s.count() != k)
      throw Error(ErrorCode::WrongSetSize, "set " + set_str(s) + " does not have " +
                                               std::to_string(k) + " distinct elements");
  std::sort(sets.begin(), sets.end(), SetBits::lex_less);
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (sets[i] == sets[i - 1])
      throw Error(ErrorCode::DuplicateSet, "set " + set_str(sets[i]) + " listed twice");
  return KSetFamily{n, k, std::move(sets)};
}

KSetFamily make_family(int n, int k, const std::vector<std::vector<int>>& sets) {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorCode::InvalidParameters,
                "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  std::vector<SetBits> bits;
  bits.reserve(sets.size());
  for (const auto& elems : sets) bits.push_back(SetBits::of(n, elems));
  return make_family_from_bits(n, k, std::move(bits));
}

bool is_intersecting(const KSetFamily& fam) {
  for (std::size_t i = 0; i < fam.sets.size(); ++i)
    for (std::size_t j = i + 1; j < fam.sets.size(); ++j)
      if (!fam.sets[i].intersects(fam.sets[j])) return false;
  return true;
}

DegreeProfile degree_profile(const KSetFamily& fam) {
  DegreeProfile deg(fam.n + 1, 0);
  for (const auto& s : fam.sets)
    for (int x : s.elements()) ++deg[x];
  return deg;
}

std::optional<std::int64_t> is_regular(const KSetFamily& fam) {
  require_nonempty(fam);
  const auto deg = degree_profile(fam);
  for (int x = 2; x <= fam.n; ++x)
    if (deg[x] != deg[1]) return std::nullopt;
  return deg[1];
}

Rat irregularity_ratio(const KSetFamily& fam) {
  require_nonempty(fam);
  const auto deg = degree_profile(fam);
  std::int64_t lo = deg[1], hi = deg[1];
  for (int x = 2; x <= fam.n; ++x) {
    lo = std::min(lo, deg[x]);
    hi = std::max(hi, deg[x]);
  }
  if (lo == 0) throw Error(ErrorCode::ZeroMinDegree, "some element of the ground set is uncovered");
  return Rat(hi, lo);
}

std::int64_t diversity(const KSetFamily& fam) {
  require_nonempty(fam);
  const auto deg = degree_profile(fam);
  const std::int64_t max_deg = *std::max_element(deg.begin() + 1, deg.end());
  return fam.size() - max_deg;
}

std::optional<std::int64_t> is_subset_regular(const KSetFamily& fam, int s) {
  if (s < 1 || s > fam.k)
    throw Error(ErrorCode::InvalidS, "s must satisfy 1 <= s <= k, got s=" + std::to_string(s));
  require_nonempty(fam);
  std::int64_t common = -1;
  bool regular = true;
  for_each_combination(fam.n, s, [&](const std::vector<int>& subset) {
    if (!regular) return;
    const SetBits probe = SetBits::of(fam.n, subset);
    std::int64_t d = 0;
    for (const auto& member : fam.sets)
      if (probe.is_subset_of(member)) ++d;
    if (common < 0) common = d;
    else if (d != common) regular = false;
  });
  if (!regular) return std::nullopt;
  return common;
}

InnerDistribution inner_distribution(const KSetFamily& fam) {
  require_nonempty(fam);
  std::vector<std::int64_t> ordered(fam.k + 1, 0);
  ordered[0] = fam.size(); // identity pairs
  for (std::size_t i = 0; i < fam.sets.size(); ++i)
    for (std::size_t j = i + 1; j < fam.sets.size(); ++j) {
      const int meet = fam.sets[i].intersection_count(fam.sets[j]);
      ordered[fam.k - meet] += 2;
    }
  InnerDistribution dist;
  dist.family_size = fam.size();
  dist.a.reserve(fam.k + 1);
  for (int i = 0; i <= fam.k; ++i) dist.a.emplace_back(ordered[i], fam.size());
  return dist;
}

std::vector<std::int64_t> meet_profile(const KSetFamily& fam, const SetBits& probe) {
  if (probe.count() != fam.k)
    throw Error(ErrorCode::WrongProbeSize, "probe must be a " + std::to_string(fam.k) + "-subset");
  std::vector<std::int64_t> counts(fam.k + 1, 0);
  for (const auto& member : fam.sets) ++counts[fam.k - probe.intersection_count(member)];
  return counts;
}

Rat family_ratio(const KSetFamily& fam) {
  require_nonempty(fam);
  return Rat(fam.k, fam.n);
}

} // namespace rif
