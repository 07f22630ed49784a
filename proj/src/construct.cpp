#include "rif/construct.hpp"

#include "rif/combinatorics.hpp"
#include "rif/config.hpp"
#include "rif/error.hpp"
#include "rif/gf.hpp"
#include "rif/numeric.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace rif {

namespace {

void check_cap(const Int& count, const std::string& what) {
  if (count > size_cap())
    throw Error(ErrorCode::SizeCapExceeded,
                what + " would materialize " + count.str() + " sets (cap " +
                    std::to_string(size_cap()) + ", RIF_SIZE_CAP overrides)");
}

void require_regular_intersecting(const KSetFamily& fam, const std::string& who) {
  if (!is_regular(fam))
    throw Error(ErrorCode::InvalidParameters, who + " needs a regular input family");
  if (!is_intersecting(fam))
    throw Error(ErrorCode::InvalidParameters, who + " needs an intersecting input family");
}

std::vector<int> mask_elements(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

SetBits mask_to_bits(int n, std::uint64_t m) {
  SetBits s(n);
  for (int x : mask_elements(m)) s.set(x);
  return s;
}

} // namespace

KSetFamily projective_plane(int q) {
  FiniteField gf(q); // throws NotPrimePower
  const int n = q * q + q + 1;

  // Normalized homogeneous coordinates, first nonzero coordinate 1, in
  // lexicographic order; position in this list is the point label.
  std::vector<std::array<int, 3>> reps;
  reps.push_back({0, 0, 1});
  for (int b = 0; b < q; ++b) reps.push_back({0, 1, b});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
  std::sort(reps.begin(), reps.end());

  std::vector<SetBits> lines;
  lines.reserve(n);
  for (const auto& line : reps) {
    SetBits pts(n);
    for (int id = 0; id < n; ++id) {
      const auto& pt = reps[id];
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = gf.add(dot, gf.mul(line[c], pt[c]));
      if (dot == 0) pts.set(id + 1);
    }
    lines.push_back(std::move(pts));
  }
  return make_family_from_bits(n, q + 1, std::move(lines));
}

KSetFamily extend_family(const KSetFamily& fam, int l) {
  if (fam.sets.empty()) throw Error(ErrorCode::EmptyFamily, "cannot extend an empty family");
  if (l < 1) throw Error(ErrorCode::InvalidParameters, "l must be >= 1");
  require_regular_intersecting(fam, "extend_family");
  if (fam.k + l > fam.n)
    throw Error(ErrorCode::GroundSetExhausted,
                "k+l = " + std::to_string(fam.k + l) + " exceeds n = " + std::to_string(fam.n));
  // l < min |F1 \ F2| over distinct pairs keeps the contained member unique.
  int min_diff = fam.n + 1;
  for (std::size_t i = 0; i < fam.sets.size(); ++i)
    for (std::size_t j = i + 1; j < fam.sets.size(); ++j)
      min_diff = std::min(min_diff, fam.k - fam.sets[i].intersection_count(fam.sets[j]));
  if (fam.size() > 1 && l >= min_diff)
    throw Error(ErrorCode::LTooLarge, "l = " + std::to_string(l) +
                                          " not below the minimum pairwise difference " +
                                          std::to_string(min_diff));
  check_cap(binomial(fam.n - fam.k, l) * fam.size(), "extend_family");

  std::vector<SetBits> out;
  for (const auto& member : fam.sets) {
    std::vector<int> comp;
    for (int x = 1; x <= fam.n; ++x)
      if (!member.test(x)) comp.push_back(x);
    for_each_combination(static_cast<int>(comp.size()), l, [&](const std::vector<int>& pick) {
      SetBits s = member;
      for (int idx : pick) s.set(comp[idx - 1]);
      out.push_back(std::move(s));
    });
  }
  return make_family_from_bits(fam.n, fam.k + l, std::move(out));
}

KSetFamily disjoint_sum(const KSetFamily& fam_f, const KSetFamily& fam_g) {
  if (fam_f.sets.empty() || fam_g.sets.empty())
    throw Error(ErrorCode::EmptyFamily, "disjoint sum needs nonempty families");
  require_regular_intersecting(fam_f, "disjoint_sum (left operand)");
  if (!is_regular(fam_g))
    throw Error(ErrorCode::InvalidParameters, "disjoint_sum needs a regular right operand");
  if (Rat(fam_f.k, fam_f.n) != Rat(fam_g.k, fam_g.n))
    throw Error(ErrorCode::RatioMismatch,
                "ratios differ: " + rat_str(Rat(fam_f.k, fam_f.n)) + " vs " +
                    rat_str(Rat(fam_g.k, fam_g.n)));
  check_cap(Int(fam_f.size()) * fam_g.size(), "disjoint_sum");

  const int n = fam_f.n + fam_g.n;
  std::vector<SetBits> out;
  out.reserve(std::size_t(fam_f.size()) * fam_g.size());
  for (const auto& f : fam_f.sets)
    for (const auto& g : fam_g.sets) {
      SetBits s(n);
      for (int x : f.elements()) s.set(x);
      for (int y : g.elements()) s.set(fam_f.n + y);
      out.push_back(std::move(s));
    }
  return make_family_from_bits(n, fam_f.k + fam_g.k, std::move(out));
}

KSetFamily product_family(const KSetFamily& f1, const KSetFamily& f2) {
  if (f1.sets.empty() || f2.sets.empty())
    throw Error(ErrorCode::EmptyFamily, "product needs nonempty families");
  require_regular_intersecting(f1, "product_family (left operand)");
  require_regular_intersecting(f2, "product_family (right operand)");
  check_cap(Int(f1.size()) * f2.size(), "product_family");

  const int n = f1.n * f2.n;
  std::vector<SetBits> out;
  out.reserve(std::size_t(f1.size()) * f2.size());
  for (const auto& a : f1.sets) {
    const auto ea = a.elements();
    for (const auto& b : f2.sets) {
      SetBits s(n);
      for (int x : ea)
        for (int y : b.elements()) s.set((x - 1) * f2.n + y);
      out.push_back(std::move(s));
    }
  }
  return make_family_from_bits(n, f1.k * f2.k, std::move(out));
}

KSetFamily complete_uniform(int z, int m) {
  if (m < 1 || m > z)
    throw Error(ErrorCode::InvalidParameters,
                "need 1 <= m <= z, got z=" + std::to_string(z) + " m=" + std::to_string(m));
  check_cap(binomial(z, m), "complete_uniform");
  std::vector<SetBits> out;
  for_each_combination(z, m, [&](const std::vector<int>& c) { out.push_back(SetBits::of(z, c)); });
  return make_family_from_bits(z, m, std::move(out));
}

KSetFamily prop3_construction(int q, int l) {
  if (l < 1) throw Error(ErrorCode::InvalidParameters, "l must be >= 1");
  const int plane_n = q * q + q + 1;
  check_cap(Int(plane_n) * binomial(std::int64_t(l) * plane_n, std::int64_t(l) * (q + 1)),
            "prop3_construction");
  const KSetFamily plane = projective_plane(q);
  const KSetFamily block = complete_uniform(l * plane_n, l * (q + 1));
  return disjoint_sum(plane, block);
}

// ---- n = 2k half-family machinery ------------------------------------------

namespace {

struct HalfBuilder {
  int k;
  int n;   // 2k-1
  int top; // element 2k-1
  std::vector<std::uint64_t> sets;
  std::unordered_set<std::uint64_t> present;
  std::vector<std::int64_t> deg; // union degrees, 1-indexed

  explicit HalfBuilder(int kk) : k(kk), n(2 * kk - 1), top(2 * kk - 1), deg(2 * kk, 0) {}

  void add(std::uint64_t m) {
    sets.push_back(m);
    present.insert(m);
    for (int x : mask_elements(m)) ++deg[x];
  }

  // In-place swap of g for h inside sets[pos].
  void replace(std::size_t pos, int g, int h) {
    const std::uint64_t a = sets[pos];
    const std::uint64_t b = (a & ~(std::uint64_t(1) << g)) | (std::uint64_t(1) << h);
    present.erase(a);
    present.insert(b);
    sets[pos] = b;
    --deg[g];
    ++deg[h];
  }

  // First stored set with g in, h out, swap not yet present.
  bool replace_first(int g, int h) {
    const std::uint64_t gb = std::uint64_t(1) << g, hb = std::uint64_t(1) << h;
    for (std::size_t pos = 0; pos < sets.size(); ++pos) {
      const std::uint64_t a = sets[pos];
      if (!(a & gb) || (a & hb)) continue;
      const std::uint64_t b = (a & ~gb) | hb;
      if (present.count(b)) continue;
      replace(pos, g, h);
      return true;
    }
    return false;
  }
};

} // namespace

KSetFamily balanced_half_family(const HalfFamilySpec& spec) {
  const int k = spec.k;
  if (k < 2 || 2 * k - 1 > 62)
    throw Error(ErrorCode::InvalidParameters, "half family needs 2 <= k <= 31");
  const int n = 2 * k - 1;
  if (static_cast<int>(spec.target_profile.size()) != n + 1)
    throw Error(ErrorCode::InvalidParameters,
                "target_profile must have " + std::to_string(n + 1) + " slots (slot 0 unused)");
  std::int64_t profile_sum = 0;
  for (int x = 1; x <= n; ++x) {
    if (spec.target_profile[x] < 0)
      throw Error(ErrorCode::ProfileInfeasible, "negative target degree");
    profile_sum += spec.target_profile[x];
  }
  if (profile_sum % (k - 1) != 0)
    throw Error(ErrorCode::ProfileInfeasible, "profile sum is not a multiple of k-1");
  const std::int64_t size = profile_sum / (k - 1);
  check_cap(Int(size), "balanced_half_family");

  std::unordered_set<std::uint64_t> exceptions;
  for (const auto& elems : spec.exceptions) {
    const SetBits s = SetBits::of(n, elems);
    if (s.count() != k - 1)
      throw Error(ErrorCode::InvalidParameters, "exception sets must have k-1 elements");
    if (!s.test(n))
      throw Error(ErrorCode::InvalidParameters,
                  "every exception must contain element " + std::to_string(n));
    std::uint64_t m = 0;
    for (int x : s.elements()) m |= std::uint64_t(1) << x;
    exceptions.insert(m);
  }

  HalfBuilder b(k);
  const std::uint64_t top_bit = std::uint64_t(1) << b.top;

  // Core: every (k-1)-set through 2k-1, except the exceptions.
  for_each_combination(2 * k - 2, k - 2, [&](const std::vector<int>& c) {
    std::uint64_t m = top_bit;
    for (int x : c) m |= std::uint64_t(1) << x;
    if (!exceptions.count(m)) b.add(m);
  });
  const std::vector<std::int64_t> core_deg = b.deg; // fixed from here on

  const std::int64_t fill = size - b.sets.size();
  if (fill < 0)
    throw Error(ErrorCode::ProfileInfeasible, "target size below the through-(2k-1) core");

  // Greedy colex fill of the [2k-2] layer under the ceil-average degree cap.
  std::vector<std::uint64_t> layer;
  for_each_combination(2 * k - 2, k - 1, [&](const std::vector<int>& c) {
    std::uint64_t m = 0;
    for (int x : c) m |= std::uint64_t(1) << x;
    layer.push_back(m);
  });
  std::sort(layer.begin(), layer.end()); // numeric order on masks = colex
  if (fill > static_cast<std::int64_t>(layer.size()))
    throw Error(ErrorCode::ProfileInfeasible, "layer too small for the target size");

  const std::int64_t cap_avg = (fill * (k - 1) + (2 * k - 3)) / (2 * k - 2);
  std::int64_t taken = 0;
  for (std::uint64_t m : layer) {
    if (taken == fill) break;
    bool ok = true;
    for (int x : mask_elements(m))
      if (b.deg[x] - core_deg[x] + 1 > cap_avg) { ok = false; break; }
    if (ok) { b.add(m); ++taken; }
  }
  for (std::uint64_t m : layer) {
    if (taken == fill) break;
    if (!b.present.count(m)) { b.add(m); ++taken; }
  }

  // Balance the layer to within 1 by (g,h)-replacements; the replacement set is
  // scanned in stored order, and the sum of squared layer degrees strictly
  // decreases at each step, which is the termination measure.
  auto layer_deg = [&](int x) { return b.deg[x] - core_deg[x]; };
  auto layer_deg_sq = [&] {
    std::int64_t s = 0;
    for (int x = 1; x <= 2 * k - 2; ++x) s += layer_deg(x) * layer_deg(x);
    return s;
  };
  while (true) {
    int g = 1, h = 1;
    for (int x = 2; x <= 2 * k - 2; ++x) {
      if (layer_deg(x) > layer_deg(g)) g = x;
      if (layer_deg(x) < layer_deg(h)) h = x;
    }
    if (layer_deg(g) - layer_deg(h) <= 1) break;
    const std::int64_t measure = layer_deg_sq();
    const std::uint64_t gb = std::uint64_t(1) << g, hb = std::uint64_t(1) << h;
    bool done = false;
    for (std::size_t pos = 0; pos < b.sets.size() && !done; ++pos) {
      const std::uint64_t a = b.sets[pos];
      if ((a & top_bit) || !(a & gb) || (a & hb)) continue;
      const std::uint64_t swapped = (a & ~gb) | hb;
      if (b.present.count(swapped)) continue;
      b.replace(pos, g, h);
      done = true;
    }
    if (!done)
      throw Error(ErrorCode::NoReplacementFound,
                  "no valid (" + std::to_string(g) + "," + std::to_string(h) + ")-replacement");
    if (layer_deg_sq() >= measure)
      throw Error(ErrorCode::InvariantViolation, "balancing measure failed to decrease");
  }

  // Relabel [2k-2] so that layer degrees line up with the profile slack
  // (the "w.l.o.g. elements are ordered by degree" step, as a permutation).
  {
    std::vector<int> by_slack(2 * k - 2), by_deg(2 * k - 2);
    for (int x = 1; x <= 2 * k - 2; ++x) by_slack[x - 1] = by_deg[x - 1] = x;
    std::stable_sort(by_slack.begin(), by_slack.end(), [&](int a, int c) {
      return spec.target_profile[a] - core_deg[a] < spec.target_profile[c] - core_deg[c];
    });
    std::stable_sort(by_deg.begin(), by_deg.end(),
                     [&](int a, int c) { return layer_deg(a) < layer_deg(c); });
    std::vector<int> perm(2 * k, 0); // old element -> new element
    for (int i = 0; i < 2 * k - 2; ++i) perm[by_deg[i]] = by_slack[i];
    perm[b.top] = b.top;

    std::vector<std::uint64_t> remapped;
    remapped.reserve(b.sets.size());
    for (std::uint64_t m : b.sets) {
      // only the layer is relabeled; the core must keep the literal exceptions
      if (m & top_bit) { remapped.push_back(m); continue; }
      std::uint64_t out = 0;
      for (int x : mask_elements(m)) out |= std::uint64_t(1) << perm[x];
      remapped.push_back(out);
    }
    b.sets = std::move(remapped);
    b.present.clear();
    std::fill(b.deg.begin(), b.deg.end(), 0);
    for (std::uint64_t m : b.sets) {
      b.present.insert(m);
      for (int x : mask_elements(m)) ++b.deg[x];
    }
  }

  // Transfer the excess degree of 2k-1 onto the deficient elements.
  while (b.deg[b.top] > spec.target_profile[b.top]) {
    int h = -1;
    std::int64_t deficit = 0;
    for (int x = 1; x <= 2 * k - 2; ++x) {
      const std::int64_t d = spec.target_profile[x] - b.deg[x];
      if (d > deficit) { deficit = d; h = x; }
    }
    if (h < 0)
      throw Error(ErrorCode::ProfileInfeasible, "excess at 2k-1 with no deficient element");
    if (!b.replace_first(b.top, h))
      throw Error(ErrorCode::NoReplacementFound,
                  "no valid (2k-1," + std::to_string(h) + ")-replacement");
  }

  for (int x = 1; x <= n; ++x)
    if (b.deg[x] != spec.target_profile[x])
      throw Error(ErrorCode::ProfileInfeasible,
                  "element " + std::to_string(x) + " ended at degree " + std::to_string(b.deg[x]) +
                      " instead of " + std::to_string(spec.target_profile[x]));
  for (std::uint64_t m : exceptions)
    if (b.present.count(m))
      throw Error(ErrorCode::InvariantViolation, "an exception set slipped into the family");

  std::vector<SetBits> out;
  out.reserve(b.sets.size());
  for (std::uint64_t m : b.sets) out.push_back(mask_to_bits(n, m));
  return make_family_from_bits(n, k - 1, std::move(out));
}

KSetFamily fold_to_intersecting(const KSetFamily& half, int k,
                                const std::vector<std::vector<int>>& removals) {
  if (half.n != 2 * k - 1 || half.k != k - 1)
    throw Error(ErrorCode::InvalidParameters,
                "half family must be (k-1)-uniform on [2k-1] for k=" + std::to_string(k));
  if (2 * k > 62) throw Error(ErrorCode::InvalidParameters, "fold needs k <= 31");
  check_cap(binomial(2 * k - 1, k), "fold_to_intersecting");

  const int n = 2 * k;
  const std::uint64_t full_small = ((std::uint64_t(1) << (2 * k)) - 1) & ~std::uint64_t(1);

  std::unordered_set<std::uint64_t> half_masks;
  for (const auto& s : half.sets) {
    std::uint64_t m = 0;
    for (int x : s.elements()) m |= std::uint64_t(1) << x;
    half_masks.insert(m);
  }

  std::vector<std::uint64_t> members;
  const std::uint64_t top_bit = std::uint64_t(1) << (2 * k);
  for (std::uint64_t m : half_masks) members.push_back(m | top_bit);

  std::unordered_set<std::uint64_t> bar;
  for_each_combination(2 * k - 1, k, [&](const std::vector<int>& c) {
    std::uint64_t m = 0;
    for (int x : c) m |= std::uint64_t(1) << x;
    if (!half_masks.count(full_small & ~m)) bar.insert(m);
  });

  for (const auto& elems : removals) {
    const SetBits s = SetBits::of(2 * k - 1, elems);
    if (s.count() != k)
      throw Error(ErrorCode::InvalidParameters, "removals must be k-subsets of [2k-1]");
    std::uint64_t m = 0;
    for (int x : s.elements()) m |= std::uint64_t(1) << x;
    if (!bar.erase(m))
      throw Error(ErrorCode::RemovalNotPresent, "removal set is not in the folded family");
  }

  for (std::uint64_t m : bar) members.push_back(m);
  std::vector<SetBits> out;
  out.reserve(members.size());
  for (std::uint64_t m : members) out.push_back(mask_to_bits(n, m));
  return make_family_from_bits(n, k, std::move(out));
}

KSetFamily brace_daykin(int k) {
  if (k < 3) throw Error(ErrorCode::InvalidParameters, "brace_daykin needs k >= 3");
  if ((k & (k - 1)) == 0)
    throw Error(ErrorCode::PowerOfTwoK,
                "k = " + std::to_string(k) + " is a power of 2; size C(2k-1,k) is unattainable");
  check_cap(binomial(2 * k - 1, k), "brace_daykin");

  const std::int64_t d = to_int64(binomial(2 * k - 2, k - 2) / 2);
  HalfFamilySpec spec;
  spec.k = k;
  spec.target_profile.assign(2 * k, d);
  spec.target_profile[0] = 0;
  const KSetFamily half = balanced_half_family(spec);
  return fold_to_intersecting(half, k, {});
}

KSetFamily neq2k_construction(int k) {
  if (k < 4 || (k & (k - 1)) != 0)
    throw Error(ErrorCode::KNotPowerOfTwo,
                "k must be a power of 2 with k >= 4 (no regular intersecting family exists "
                "for k = 2, n = 4)");
  check_cap(binomial(2 * k - 1, k) - 3, "neq2k_construction");

  std::vector<std::vector<int>> exceptions(3);
  for (int x = k + 1; x <= 2 * k - 1; ++x) exceptions[0].push_back(x);
  for (int x = 1; x <= k / 2; ++x) exceptions[1].push_back(x);
  for (int x = 3 * k / 2 + 1; x <= 2 * k - 1; ++x) exceptions[1].push_back(x);
  for (int x = k / 2 + 1; x <= k; ++x) exceptions[2].push_back(x);
  for (int x = 3 * k / 2 + 1; x <= 2 * k - 1; ++x) exceptions[2].push_back(x);

  const std::int64_t d = to_int64((binomial(2 * k - 2, k - 2) - 3) / 2);
  HalfFamilySpec spec;
  spec.k = k;
  spec.exceptions = exceptions;
  spec.target_profile.assign(2 * k, 0);
  for (int x = 1; x <= 2 * k - 1; ++x)
    spec.target_profile[x] = x <= 3 * k / 2 ? d + 1 : d;
  const KSetFamily half = balanced_half_family(spec);

  std::vector<std::vector<int>> removals;
  for (const auto& exc : exceptions) {
    std::vector<int> comp;
    std::vector<bool> in(2 * k, false);
    for (int x : exc) in[x] = true;
    for (int x = 1; x <= 2 * k - 1; ++x)
      if (!in[x]) comp.push_back(x);
    removals.push_back(std::move(comp));
  }
  return fold_to_intersecting(half, k, removals);
}

} // namespace rif
