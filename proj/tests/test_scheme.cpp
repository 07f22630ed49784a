#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rif/combinatorics.hpp"
#include "rif/construct.hpp"
#include "rif/error.hpp"
#include "rif/scheme.hpp"

#include <algorithm>
#include <random>

using namespace rif;

TEST_CASE("eigenvalue_P basics") {
  // row 0 = valencies C(k,i)C(n-k,i)
  const std::vector<Int> valencies{1, 12, 18, 4};
  for (int i = 0; i <= 3; ++i) CHECK(eigenvalue_P(7, 3, 0, i) == valencies[i]);
  CHECK(eigenvalue_P(7, 3, 1, 3) == -3); // (-1)^j C(n-k-j, k-j)
  CHECK(eigenvalue_P(9, 4, 0, 0) == 1);
  CHECK_THROWS_WITH_AS(eigenvalue_P(7, 3, 4, 0), doctest::Contains("InvalidIndices"), Error);
  CHECK_THROWS_WITH_AS(eigenvalue_P(5, 3, 0, 0), doctest::Contains("InvalidParameters"), Error);
}

TEST_CASE("scheme_tables on J(7,3) and J(9,4)") {
  const SchemeTables t = scheme_tables(7, 3);
  CHECK(t.v == 35);
  CHECK(t.f == std::vector<Int>{1, 6, 14, 14});
  CHECK(t.r == std::vector<Int>{1, 12, 18, 4});
  Int fsum = 0, rsum = 0;
  for (const auto& f : t.f) fsum += f;
  for (const auto& r : t.r) rsum += r;
  CHECK(fsum == 35);
  CHECK(rsum == 35);

  const SchemeTables t94 = scheme_tables(9, 4);
  CHECK(t94.v == 126);
  CHECK(t94.r == std::vector<Int>{1, 20, 60, 40, 5});

  CHECK_THROWS_WITH_AS(scheme_tables(7, 4), doctest::Contains("InvalidParameters"), Error);
}

TEST_CASE("scheme identity sweep over 2k <= n <= 20") {
  for (int n = 2; n <= 20; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const SchemeTables t = scheme_tables(n, k);

      // P Q = v I and Q P = v I, exactly
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
          Rat pq = 0, qp = 0;
          for (int i = 0; i <= k; ++i) {
            pq += Rat(t.P(a, i)) * t.Q(i, b);
            qp += t.Q(a, i) * Rat(t.P(i, b));
          }
          CHECK(pq == (a == b ? Rat(t.v) : Rat(0)));
          CHECK(qp == (a == b ? Rat(t.v) : Rat(0)));
        }

      // r_i Q_ij = f_j P_ji
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j)
          CHECK(Rat(t.r[i]) * t.Q(i, j) == Rat(t.f[j]) * Rat(t.P(j, i)));

      // row sums: all-ones for j = 0, zero for j >= 1
      for (int j = 0; j <= k; ++j) {
        Int sum = 0;
        for (int i = 0; i <= k; ++i) sum += t.P(j, i);
        CHECK(sum == (j == 0 ? t.v : Int(0)));
      }

      // both eigenvalue sums agree, and the P_{jk} closed form holds
      for (int j = 0; j <= k; ++j) {
        for (int i = 0; i <= k; ++i)
          CHECK(eigenvalue_P(n, k, j, i) == eigenvalue_P_second(n, k, j, i));
        const Int pjk = (j % 2 == 0 ? 1 : -1) * binomial(n - k - j, k - j);
        CHECK(t.P(j, k) == pjk);
      }

      // closed dual eigenvalues match the inverted matrix
      for (int i = 0; i <= k; ++i) {
        CHECK(dual_eigenvalue_closed(t, i, 1) == t.Q(i, 1));
        if (k >= 2) CHECK(dual_eigenvalue_closed(t, i, 2) == t.Q(i, 2));
      }

      // gamma closed form equals alpha_i - (k-1)(n-k-1) beta_i
      if (k >= 3) {
        const auto gamma = gamma_coefficients(n, k);
        CHECK(gamma[0] == 0);
        const Rat c1 = Rat(Int(k) * (n - k), t.f[1]);
        const Rat c2 = Rat(Int(k) * (k - 1) * (n - k) * (n - k - 1), t.f[2]);
        for (int i = 0; i < k; ++i) {
          const Rat alpha = c2 * t.Q(i, 2);
          const Rat beta = c1 * t.Q(i, 1);
          CHECK(Rat(gamma[i]) == alpha - Rat(Int(k - 1) * (n - k - 1)) * beta);
        }
      }
    }
  }
}

TEST_CASE("dual_eigenvalue_closed examples") {
  CHECK(dual_eigenvalue_closed(7, 3, 0, 1) == 6); // Q_01 = f_1
  CHECK(dual_eigenvalue_closed(7, 3, 2, 1) == -1);
  // c2 Q_22 = -12 with c2 = 3*2*4*3/14 = 36/7, so Q_22 = -12*7/36 = -7/3
  CHECK(dual_eigenvalue_closed(7, 3, 2, 2) == Rat(-7, 3));
  CHECK_THROWS_WITH_AS(dual_eigenvalue_closed(7, 3, 0, 3), doctest::Contains("InvalidIndices"),
                       Error);
}

TEST_CASE("macwilliams_transform") {
  const SchemeTables t = scheme_tables(7, 3);
  const KSetFamily fano = projective_plane(2);
  const auto mw = macwilliams_transform(t, inner_distribution(fano));
  CHECK(mw[0] == 7);
  CHECK(mw[1] == 0); // regular
  CHECK(mw[2] == 0); // 2-subset-regular
  CHECK(mw[3] > 0);

  // singleton family: entry j = f_j
  const auto single = macwilliams_transform(t, inner_distribution(make_family(7, 3, {{1, 2, 3}})));
  for (int j = 0; j <= 3; ++j) CHECK(single[j] == Rat(t.f[j]));

  InnerDistribution short_dist;
  short_dist.family_size = 1;
  short_dist.a = {1, 0};
  CHECK_THROWS_WITH_AS(macwilliams_transform(t, short_dist), doctest::Contains("DimensionMismatch"),
                       Error);
}

TEST_CASE("macwilliams entries are nonnegative for genuine families") {
  const std::vector<KSetFamily> fams{projective_plane(2), projective_plane(3),
                                     complete_uniform(8, 4), brace_daykin(3)};
  for (const auto& fam : fams) {
    const auto mw = macwilliams_transform(scheme_tables(fam.n, fam.k), inner_distribution(fam));
    for (const auto& e : mw) CHECK(e >= 0);
    if (is_regular(fam)) CHECK(mw[1] == 0);
  }
}

TEST_CASE("macwilliams transform is nonnegative on random families") {
  // Delsarte's inequality holds for every family, so random subsets of the
  // k-subset lattice exercise the whole P/Q pipeline against raw counting.
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + int(rng() % 7); // 6..12
    const int k = 2 + int(rng() % std::max(1, n / 2 - 1));
    if (2 * k > n) continue;
    std::vector<std::vector<int>> pool;
    for_each_combination(n, k, [&](const std::vector<int>& c) { pool.push_back(c); });
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t take = 1 + rng() % std::min<std::size_t>(pool.size(), 40);
    pool.resize(take);
    const KSetFamily fam = make_family(n, k, pool);
    const auto mw = macwilliams_transform(scheme_tables(n, k), inner_distribution(fam));
    CHECK(mw[0] == fam.size());
    for (const auto& e : mw) CHECK(e >= 0);
  }
}

TEST_CASE("gamma_coefficients") {
  const auto g13 = gamma_coefficients(13, 4);
  REQUIRE(g13.size() == 4);
  CHECK(g13[0] == 0);
  CHECK(g13[1] == -264); // -1 * 11 * (52 - 13 - 16 + 1)
  CHECK(g13[3] == 0);    // vanishes at i = k-1 when n = k^2 - k + 1

  const auto g14 = gamma_coefficients(14, 4);
  for (int i = 1; i < 4; ++i) CHECK(g14[i] < 0); // strictly negative past the threshold

  CHECK_THROWS_WITH_AS(gamma_coefficients(7, 2), doctest::Contains("InvalidParameters"), Error);
}
