#include "rif/scheme.hpp"

#include "rif/error.hpp"
#include "rif/simplex.hpp"

#include <string>

namespace rif {

namespace {

void check_scheme_params(int n, int k) {
  if (k < 1 || n < 2 * k)
    throw Error(ErrorCode::InvalidParameters,
                "Johnson scheme needs 1 <= k and n >= 2k, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
}

void check_indices(int n, int k, int j, int i) {
  check_scheme_params(n, k);
  if (i < 0 || i > k || j < 0 || j > k)
    throw Error(ErrorCode::InvalidIndices, "indices must lie in 0..k");
}

} // namespace

Int eigenvalue_P(int n, int k, int j, int i) {
  check_indices(n, k, j, i);
  Int sum = 0;
  for (int h = 0; h <= i; ++h) {
    const Int term = binomial(j, h) * binomial(k - j, i - h) * binomial(n - k - j, i - h);
    sum += (h % 2 == 0) ? term : -term;
  }
  return sum;
}

Int eigenvalue_P_second(int n, int k, int j, int i) {
  check_indices(n, k, j, i);
  Int sum = 0;
  for (int h = i; h <= k; ++h) {
    const Int term = binomial(h, i) * binomial(n - 2 * h, k - h) * binomial(n - h - j, h - j);
    sum += ((h - i + j) % 2 == 0) ? term : -term;
  }
  return sum;
}

SchemeTables scheme_tables(int n, int k) {
  check_scheme_params(n, k);
  SchemeTables t;
  t.n = n;
  t.k = k;
  t.v = binomial(n, k);
  t.P = Mat<Int>(k + 1, k + 1);
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= k; ++i) t.P(j, i) = eigenvalue_P(n, k, j, i);

  Mat<Rat> p_rat(k + 1, k + 1);
  for (int j = 0; j <= k; ++j)
    for (int i = 0; i <= k; ++i) p_rat(j, i) = Rat(t.P(j, i));
  Mat<Rat> inv = mat_inverse(p_rat);
  t.Q = Mat<Rat>(k + 1, k + 1);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) t.Q(i, j) = Rat(t.v) * inv(i, j);

  t.r.resize(k + 1);
  t.f.resize(k + 1);
  for (int i = 0; i <= k; ++i) t.r[i] = t.P(0, i);
  for (int j = 0; j <= k; ++j) {
    if (!is_integer(t.Q(0, j)))
      throw Error(ErrorCode::InvariantViolation, "multiplicity f_" + std::to_string(j) +
                                                     " is not an integer: " + rat_str(t.Q(0, j)));
    t.f[j] = numerator(t.Q(0, j));
  }
  return t;
}

Rat dual_eigenvalue_closed(const SchemeTables& t, int i, int j) {
  const std::int64_t n = t.n, k = t.k;
  if (i < 0 || i > k || (j != 1 && j != 2))
    throw Error(ErrorCode::InvalidIndices, "need 0 <= i <= k and j in {1,2}");
  if (j == 2 && k < 2)
    throw Error(ErrorCode::InvalidIndices, "Q_{i2} needs k >= 2");
  if (j == 1) {
    const Rat c1 = Rat(Int(k) * (n - k), t.f[1]);
    return Rat(Int(k) * n - Int(i) * n - Int(k) * k) / c1;
  }
  const Rat c2 = Rat(Int(k) * (k - 1) * (n - k) * (n - k - 1), t.f[2]);
  const Int ki = k - i, nki = n - k - i, ii = i;
  const Int val = ki * (ki - 1) * nki * (nki - 1) - 2 * ii * ii * ki * nki +
                  ii * ii * (ii - 1) * (ii - 1);
  return Rat(val) / c2;
}

Rat dual_eigenvalue_closed(int n, int k, int i, int j) {
  return dual_eigenvalue_closed(scheme_tables(n, k), i, j);
}

std::vector<Rat> macwilliams_transform(const SchemeTables& tables, const InnerDistribution& dist) {
  const int k = tables.k;
  if (static_cast<int>(dist.a.size()) != k + 1)
    throw Error(ErrorCode::DimensionMismatch,
                "inner distribution has " + std::to_string(dist.a.size()) + " entries, scheme needs " +
                    std::to_string(k + 1));
  std::vector<Rat> out(k + 1);
  for (int j = 0; j <= k; ++j) {
    Rat acc = 0;
    for (int i = 0; i <= k; ++i) acc += tables.Q(i, j) * dist.a[i];
    out[j] = acc;
  }
  return out;
}

std::vector<Int> gamma_coefficients(int n, int k) {
  if (k < 3 || n < 2 * k)
    throw Error(ErrorCode::InvalidParameters, "gamma coefficients need k >= 3 and n >= 2k");
  std::vector<Int> gamma(k);
  for (int i = 0; i < k; ++i)
    gamma[i] = -Int(i) * (n - 2) * (Int(k) * n - Int(i) * n - Int(k) * k + i);
  return gamma;
}

LPOutcome lp_max_regular_intersecting(int n, int k, bool require_regular) {
  const SchemeTables t = scheme_tables(n, k);
  const int nvars = k - 1; // a_1..a_{k-1}

  LinearProgram lp;
  lp.num_vars = nvars;
  lp.objective.assign(nvars, Rat(1));
  for (int j = 1; j <= k; ++j) {
    LPRow row;
    row.coeffs.resize(nvars);
    for (int i = 1; i <= k - 1; ++i) row.coeffs[i - 1] = t.Q(i, j);
    row.rel = Relation::GreaterEq;
    row.rhs = -t.Q(0, j);
    lp.rows.push_back(std::move(row));
  }
  if (require_regular) {
    LPRow row;
    row.coeffs.resize(nvars);
    for (int i = 1; i <= k - 1; ++i) row.coeffs[i - 1] = Rat(Int(k) * n - Int(i) * n - Int(k) * k);
    row.rel = Relation::Equal;
    row.rhs = -Rat(Int(k) * n - Int(k) * k);
    lp.rows.push_back(std::move(row));
  }

  const SimplexResult res = solve_lp(lp);
  LPOutcome out;
  if (res.status == SimplexStatus::Infeasible) {
    out.status = LPStatus::Infeasible;
    return out;
  }
  if (res.status == SimplexStatus::Unbounded)
    throw Error(ErrorCode::InvariantViolation, "Delsarte LP cannot be unbounded");
  out.status = LPStatus::Optimal;
  out.optimum = res.objective_value + 1;
  out.witness = res.solution;
  return out;
}

} // namespace rif
