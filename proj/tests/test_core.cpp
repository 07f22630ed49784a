#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rif/construct.hpp"
#include "rif/error.hpp"
#include "rif/family.hpp"

#include <numeric>

using namespace rif;

namespace {

// Fano plane as the cyclic shifts of {1,2,4} mod 7.
KSetFamily fano_cyclic() {
  std::vector<std::vector<int>> sets;
  for (int s = 0; s < 7; ++s) {
    std::vector<int> row;
    for (int base : {0, 1, 3}) row.push_back((base + s) % 7 + 1);
    std::sort(row.begin(), row.end());
    sets.push_back(row);
  }
  return make_family(7, 3, sets);
}

// All 3-sets on [7] through element 1.
KSetFamily star_family() {
  std::vector<std::vector<int>> sets;
  for (int a = 2; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) sets.push_back({1, a, b});
  return make_family(7, 3, sets);
}

} // namespace

TEST_CASE("make_family canonicalizes and validates") {
  const KSetFamily fano = fano_cyclic();
  CHECK(fano.size() == 7);
  CHECK(fano.n == 7);
  CHECK(fano.k == 3);
  // canonical order: lexicographically sorted element lists
  for (std::size_t i = 1; i < fano.sets.size(); ++i)
    CHECK(SetBits::lex_less(fano.sets[i - 1], fano.sets[i]));
  // the cyclic shifts of {1,2,4} pairwise meet in exactly one element
  for (std::size_t i = 0; i < fano.sets.size(); ++i)
    for (std::size_t j = i + 1; j < fano.sets.size(); ++j)
      CHECK(fano.sets[i].intersection_count(fano.sets[j]) == 1);

  CHECK(make_family(4, 2, {{1, 2}}).size() == 1);
  CHECK_THROWS_AS(make_family(4, 2, {{1, 2}, {1, 2}}), Error);
  CHECK_THROWS_WITH_AS(make_family(4, 2, {{1, 2}, {1, 2}}), doctest::Contains("DuplicateSet"),
                       Error);
  CHECK_THROWS_WITH_AS(make_family(4, 2, {{1, 2, 3}}), doctest::Contains("WrongSetSize"), Error);
  CHECK_THROWS_WITH_AS(make_family(4, 2, {{1, 1}}), doctest::Contains("WrongSetSize"), Error);
  CHECK_THROWS_WITH_AS(make_family(4, 2, {{0, 2}}), doctest::Contains("ElementOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(make_family(4, 2, {{1, 5}}), doctest::Contains("ElementOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(make_family(3, 4, {}), doctest::Contains("InvalidParameters"), Error);
}

TEST_CASE("is_intersecting") {
  CHECK(is_intersecting(fano_cyclic()));
  CHECK_FALSE(is_intersecting(make_family(4, 2, {{1, 2}, {3, 4}})));
  CHECK(is_intersecting(star_family()));
  CHECK(is_intersecting(make_family(5, 2, {})));      // empty
  CHECK(is_intersecting(make_family(5, 2, {{1, 2}}))); // singleton
}

TEST_CASE("degree_profile") {
  const auto fano_deg = degree_profile(fano_cyclic());
  for (int x = 1; x <= 7; ++x) CHECK(fano_deg[x] == 3);

  const auto star_deg = degree_profile(star_family());
  CHECK(star_deg[1] == 15);
  for (int x = 2; x <= 7; ++x) CHECK(star_deg[x] == 5);

  const auto empty_deg = degree_profile(make_family(5, 2, {}));
  for (int x = 1; x <= 5; ++x) CHECK(empty_deg[x] == 0);
}

TEST_CASE("degree sum equals k|F|") {
  for (const KSetFamily& fam : {fano_cyclic(), star_family(), projective_plane(3)}) {
    const auto deg = degree_profile(fam);
    CHECK(std::accumulate(deg.begin(), deg.end(), std::int64_t(0)) == fam.k * fam.size());
  }
}

TEST_CASE("is_regular") {
  const auto fano_reg = is_regular(fano_cyclic());
  REQUIRE(fano_reg.has_value());
  CHECK(*fano_reg == 3);
  CHECK_FALSE(is_regular(star_family()).has_value());
  const auto pp3 = is_regular(projective_plane(3));
  REQUIRE(pp3.has_value());
  CHECK(*pp3 == 4);
  CHECK_THROWS_WITH_AS(is_regular(make_family(5, 2, {})), doctest::Contains("EmptyFamily"), Error);
}

TEST_CASE("irregularity_ratio") {
  CHECK(irregularity_ratio(fano_cyclic()) == 1);
  CHECK(irregularity_ratio(star_family()) == 3); // 15/5
  const KSetFamily partial = make_family(5, 2, {{1, 2}});
  CHECK_THROWS_WITH_AS(irregularity_ratio(partial), doctest::Contains("ZeroMinDegree"), Error);
}

TEST_CASE("diversity") {
  CHECK(diversity(star_family()) == 0);
  CHECK(diversity(fano_cyclic()) == 4);          // 7 - 3
  CHECK(diversity(projective_plane(3)) == 9);    // 13 - 4
}

TEST_CASE("is_subset_regular") {
  const KSetFamily fano = fano_cyclic();
  const auto pairs = is_subset_regular(fano, 2);
  REQUIRE(pairs.has_value());
  CHECK(*pairs == 1); // every pair of points on exactly one line

  // brute-force oracle over all 21 pairs
  for (int x = 1; x <= 7; ++x)
    for (int y = x + 1; y <= 7; ++y) {
      int through = 0;
      for (const auto& line : fano.sets)
        if (line.test(x) && line.test(y)) ++through;
      CHECK(through == 1);
    }

  const auto singles = is_subset_regular(fano, 1);
  REQUIRE(singles.has_value());
  CHECK(*singles == 3);
  CHECK(*singles == *is_regular(fano));

  CHECK_FALSE(is_subset_regular(star_family(), 1).has_value());
  CHECK_THROWS_WITH_AS(is_subset_regular(fano, 0), doctest::Contains("InvalidS"), Error);
  CHECK_THROWS_WITH_AS(is_subset_regular(fano, 4), doctest::Contains("InvalidS"), Error);
}

TEST_CASE("s-subset-regular implies r-subset-regular with the induced degree") {
  const KSetFamily pp3 = projective_plane(3); // 2-subset-regular
  const auto d2 = is_subset_regular(pp3, 2);
  REQUIRE(d2.has_value());
  const auto d1 = is_subset_regular(pp3, 1);
  REQUIRE(d1.has_value());
  // delta_1 = delta_2 * C(n-1, s-1) / C(k-1, s-1) with r=1, s=2
  CHECK(Int(*d1) == Int(*d2) * binomial(pp3.n - 1, 1) / binomial(pp3.k - 1, 1));
}

TEST_CASE("inner_distribution") {
  const InnerDistribution fano = inner_distribution(fano_cyclic());
  CHECK(fano.a == std::vector<Rat>{1, 0, 6, 0});

  const InnerDistribution pp3 = inner_distribution(projective_plane(3));
  CHECK(pp3.a == std::vector<Rat>{1, 0, 0, 12, 0});

  const InnerDistribution single = inner_distribution(make_family(6, 3, {{1, 2, 3}}));
  CHECK(single.a == std::vector<Rat>{1, 0, 0, 0});

  CHECK_THROWS_WITH_AS(inner_distribution(make_family(5, 2, {})), doctest::Contains("EmptyFamily"),
                       Error);
}

TEST_CASE("inner_distribution invariants") {
  for (const KSetFamily& fam : {fano_cyclic(), star_family(), projective_plane(3)}) {
    const InnerDistribution dist = inner_distribution(fam);
    CHECK(dist.a[0] == 1);
    Rat sum = 0;
    for (const auto& a : dist.a) {
      CHECK(a >= 0);
      sum += a;
    }
    CHECK(sum == fam.size());
    CHECK((dist.a[fam.k] == 0) == is_intersecting(fam));
    for (int i = 1; i <= fam.k; ++i) {
      const Rat doubled = dist.a[i] * fam.size() / 2;
      CHECK(is_integer(doubled)); // pair counts arrive in ordered pairs
    }
  }
}

TEST_CASE("regular families satisfy the Q-column-1 linear relation") {
  // sum over i of (kn - in - k^2) a_i vanishes for regular families
  for (const KSetFamily& fam :
       {fano_cyclic(), projective_plane(3), complete_uniform(7, 3), brace_daykin(3)}) {
    if (!is_regular(fam)) continue;
    const InnerDistribution dist = inner_distribution(fam);
    Rat acc = 0;
    for (int i = 0; i <= fam.k; ++i)
      acc += Rat(Int(fam.k) * fam.n - Int(i) * fam.n - Int(fam.k) * fam.k) * dist.a[i];
    CHECK(acc == 0);
  }
}

TEST_CASE("meet_profile") {
  const KSetFamily fano = fano_cyclic();
  const auto member = meet_profile(fano, fano.sets[0]);
  CHECK(member == std::vector<std::int64_t>{1, 0, 6, 0});
  CHECK(member[0] >= 1);

  // all 28 non-lines meet exactly 3 lines in 2 points (entry 1)
  int nonlines = 0;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      for (int c = b + 1; c <= 7; ++c) {
        const SetBits probe = SetBits::of(7, {a, b, c});
        bool is_line = false;
        for (const auto& line : fano.sets) is_line = is_line || line == probe;
        if (is_line) continue;
        ++nonlines;
        CHECK(meet_profile(fano, probe)[1] == 3);
      }
  CHECK(nonlines == 28);

  CHECK_THROWS_WITH_AS(meet_profile(fano, SetBits::of(7, {1, 2})),
                       doctest::Contains("WrongProbeSize"), Error);
}

TEST_CASE("meet_profile summed over members recovers the inner distribution") {
  for (const KSetFamily& fam : {fano_cyclic(), star_family(), projective_plane(3)}) {
    std::vector<std::int64_t> total(fam.k + 1, 0);
    for (const auto& member : fam.sets) {
      const auto profile = meet_profile(fam, member);
      std::int64_t sum = 0;
      for (int i = 0; i <= fam.k; ++i) {
        total[i] += profile[i];
        sum += profile[i];
      }
      CHECK(sum == fam.size());
    }
    const InnerDistribution dist = inner_distribution(fam);
    for (int i = 0; i <= fam.k; ++i) CHECK(Rat(total[i], fam.size()) == dist.a[i]);
  }
}

TEST_CASE("family_ratio") {
  CHECK(family_ratio(fano_cyclic()) == Rat(3, 7));
  CHECK(family_ratio(projective_plane(3)) == Rat(4, 13));
}
