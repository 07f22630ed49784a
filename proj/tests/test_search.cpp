#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rif/bounds.hpp"
#include "rif/error.hpp"
#include "rif/search.hpp"

using namespace rif;

TEST_CASE("cyclic orbit search") {
  const SearchResult fano = cyclic_orbit_search(7, 3);
  REQUIRE(fano.family.has_value());
  CHECK(fano.size == 7);
  CHECK(*is_regular(*fano.family) == 3);
  CHECK(is_intersecting(*fano.family));
  CHECK(fano.exhaustive);

  // PG(2,3) is cyclic (Singer difference set), so one orbit reaches 13
  const SearchResult pp3 = cyclic_orbit_search(13, 4);
  REQUIRE(pp3.family.has_value());
  CHECK(pp3.size == 13);
  CHECK(*is_regular(*pp3.family) == 4);
  CHECK(is_intersecting(*pp3.family));
  CHECK(Int(pp3.size) <= general_bound(13, 4));

  // the size-36 families at (9,4) are not unions of full Z_9 orbits
  const SearchResult r94 = cyclic_orbit_search(9, 4);
  CHECK(r94.size == 27);
  REQUIRE(r94.family.has_value());
  CHECK(*is_regular(*r94.family) == 12);
  CHECK(is_intersecting(*r94.family));

  // no regular intersecting family exists past the threshold
  const SearchResult r83 = cyclic_orbit_search(8, 3);
  CHECK_FALSE(r83.family.has_value());
  CHECK(r83.size == 0);
  CHECK(r83.exhaustive);

  SearchOptions small_limit;
  small_limit.n_limit = 10;
  CHECK_THROWS_WITH_AS(cyclic_orbit_search(12, 4, small_limit), doctest::Contains("LimitExceeded"),
                       Error);
}

TEST_CASE("dfs_search exhaustive tiny cases") {
  const SearchResult r63 = dfs_search(6, 3);
  REQUIRE(r63.family.has_value());
  CHECK(r63.size == 10);
  CHECK(r63.exhaustive);
  CHECK(*is_regular(*r63.family) == 5);
  CHECK(is_intersecting(*r63.family));

  const SearchResult r73 = dfs_search(7, 3);
  REQUIRE(r73.family.has_value());
  CHECK(r73.size == 7);
  CHECK(r73.exhaustive);
  // at the threshold, the only witness is a projective plane: 2-subset-regular
  CHECK(*is_subset_regular(*r73.family, 2) == 1);

  const SearchResult r83 = dfs_search(8, 3);
  CHECK_FALSE(r83.family.has_value());
  CHECK(r83.exhaustive);
}

TEST_CASE("dfs_search with explicit targets") {
  SearchOptions opt;
  opt.target = 7;
  const SearchResult hit = dfs_search(7, 3, opt);
  REQUIRE(hit.family.has_value());
  CHECK(hit.size == 7);

  opt.target = 14;
  const SearchResult miss = dfs_search(7, 3, opt);
  CHECK_FALSE(miss.family.has_value());
  CHECK(miss.exhaustive);

  opt.target = 36;
  const SearchResult r36 = dfs_search(9, 4, opt);
  REQUIRE(r36.family.has_value());
  CHECK(r36.size == 36);
  CHECK(*is_regular(*r36.family) == 16);
  CHECK(is_intersecting(*r36.family));

  opt.target = 5; // 3*5 not divisible by 7
  CHECK_THROWS_WITH_AS(dfs_search(7, 3, opt), doctest::Contains("InvalidParameters"), Error);
}

TEST_CASE("dfs_search determinism across thread counts") {
  SearchOptions opt1, opt4;
  opt1.threads = 1;
  opt4.threads = 4;
  const SearchResult a = dfs_search(6, 3, opt1);
  const SearchResult b = dfs_search(6, 3, opt4);
  REQUIRE(a.family.has_value());
  REQUIRE(b.family.has_value());
  CHECK(a.family->sets == b.family->sets);
  CHECK(a.size == b.size);

  opt1.target = opt4.target = 36;
  const SearchResult c = dfs_search(9, 4, opt1);
  const SearchResult d = dfs_search(9, 4, opt4);
  REQUIRE(c.family.has_value());
  REQUIRE(d.family.has_value());
  CHECK(c.family->sets == d.family->sets);
}

TEST_CASE("time limit returns best-so-far without an exhaustive claim") {
  SearchOptions opt;
  opt.target = 33; // far above the true maximum 11 at (11,4): a long refutation
  opt.time_limit_seconds = 0.05;
  const SearchResult res = dfs_search(11, 4, opt);
  CHECK_FALSE(res.exhaustive);
  CHECK_FALSE(res.family.has_value());
}

TEST_CASE("verify_certificate") {
  const SearchResult good = dfs_search(6, 3);
  const CertificateReport rep = verify_certificate(good);
  CHECK(rep.all_pass);

  SearchResult tampered = good;
  tampered.family->sets.pop_back(); // no longer regular, size mismatch
  const CertificateReport bad = verify_certificate(tampered);
  CHECK_FALSE(bad.all_pass);
  bool regular_failed = false;
  for (const auto& c : bad.checks)
    if (c.name == "is-regular" && !c.pass) regular_failed = true;
  CHECK(regular_failed);

  SearchResult empty;
  CHECK_FALSE(verify_certificate(empty).all_pass);
}

TEST_CASE("search never beats the general bound") {
  // auto-mode dfs only where the descent is cheap; cyclic everywhere
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {9, 4}}) {
    const SearchResult res = dfs_search(n, k);
    CHECK(Int(res.size) <= general_bound(n, k));
  }
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {9, 4}, {10, 4}, {12, 4}}) {
    const SearchResult cyc = cyclic_orbit_search(n, k);
    CHECK(Int(cyc.size) <= general_bound(n, k));
  }
}
