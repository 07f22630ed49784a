#include "rif/simplex.hpp"

#include "rif/error.hpp"

#include <cstddef>
#include <vector>

namespace rif {

namespace {

// Dense tableau: rows[i] holds the constraint coefficients with the rhs in the
// last slot; obj holds reduced costs with -value in the last slot.
struct Tableau {
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> obj;
  std::vector<int> basis;
  int ncols = 0; // excluding rhs

  Rat& rhs(int r) { return rows[r][ncols]; }

  void pivot(int r, int e) {
    const Rat p = rows[r][e];
    for (auto& x : rows[r]) x /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][e] == 0) continue;
      const Rat f = rows[i][e];
      for (int c = 0; c <= ncols; ++c) rows[i][c] -= f * rows[r][c];
    }
    if (obj[e] != 0) {
      const Rat f = obj[e];
      for (int c = 0; c <= ncols; ++c) obj[c] -= f * rows[r][c];
    }
    basis[r] = e;
  }

  // Bland's rule; returns Optimal or Unbounded.
  SimplexStatus iterate() {
    while (true) {
      int enter = -1;
      for (int c = 0; c < ncols; ++c)
        if (obj[c] > 0) { enter = c; break; }
      if (enter < 0) return SimplexStatus::Optimal;
      int leave = -1;
      Rat best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter] <= 0) continue;
        const Rat ratio = rows[r][ncols] / rows[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return SimplexStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  // obj = c priced out against the current basis.
  void set_objective(const std::vector<Rat>& c) {
    obj.assign(ncols + 1, Rat(0));
    for (std::size_t j = 0; j < c.size(); ++j) obj[j] = c[j];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int b = basis[r];
      if (b < static_cast<int>(c.size()) && c[b] != 0) {
        const Rat f = c[b];
        for (int col = 0; col <= ncols; ++col) obj[col] -= f * rows[r][col];
      }
    }
  }
};

} // namespace

SimplexResult solve_lp(const LinearProgram& lp) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());

  // Column layout: structural 0..n-1, then one slack/surplus per inequality,
  // then one artificial per >=/= row.
  int nslack = 0, nart = 0;
  for (const auto& row : lp.rows) {
    Rat rhs = row.rhs;
    Relation rel = row.rel;
    if (rhs < 0) rel = rel == Relation::LessEq ? Relation::GreaterEq
                     : rel == Relation::GreaterEq ? Relation::LessEq
                                                  : Relation::Equal;
    if (rel != Relation::Equal) ++nslack;
    if (rel != Relation::LessEq) ++nart;
  }

  Tableau t;
  t.ncols = n + nslack + nart;
  t.rows.assign(m, std::vector<Rat>(t.ncols + 1, Rat(0)));
  t.basis.assign(m, -1);

  int slack_at = n, art_at = n + nslack;
  std::vector<int> art_cols;
  for (int r = 0; r < m; ++r) {
    const auto& row = lp.rows[r];
    const int sign = row.rhs < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) t.rows[r][j] = sign * row.coeffs[j];
    t.rows[r][t.ncols] = sign * row.rhs;
    Relation rel = row.rel;
    if (sign < 0)
      rel = rel == Relation::LessEq ? Relation::GreaterEq
          : rel == Relation::GreaterEq ? Relation::LessEq
                                       : Relation::Equal;
    if (rel == Relation::LessEq) {
      t.rows[r][slack_at] = 1;
      t.basis[r] = slack_at++;
    } else if (rel == Relation::GreaterEq) {
      t.rows[r][slack_at++] = -1;
      t.rows[r][art_at] = 1;
      t.basis[r] = art_at;
      art_cols.push_back(art_at++);
    } else {
      t.rows[r][art_at] = 1;
      t.basis[r] = art_at;
      art_cols.push_back(art_at++);
    }
  }

  const auto is_artificial = [&](int col) { return col >= n + nslack; };

  if (nart > 0) {
    std::vector<Rat> phase1(t.ncols, Rat(0));
    for (int col : art_cols) phase1[col] = -1;
    t.set_objective(phase1);
    if (t.iterate() != SimplexStatus::Optimal)
      throw Error(ErrorCode::InvariantViolation, "phase-1 simplex cannot be unbounded");
    if (t.obj[t.ncols] != 0) // value = -obj[rhs] must be exactly 0
      return {SimplexStatus::Infeasible, Rat(0), {}};
    // Drive leftover artificials out of the basis; drop redundant rows.
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
      if (!is_artificial(t.basis[r])) continue;
      int col = -1;
      for (int c = 0; c < n + nslack; ++c)
        if (t.rows[r][c] != 0) { col = c; break; }
      if (col >= 0) {
        t.pivot(r, col);
      } else {
        t.rows.erase(t.rows.begin() + r);
        t.basis.erase(t.basis.begin() + r);
      }
    }
    // Artificials never re-enter: zero them everywhere.
    for (auto& row : t.rows)
      for (int col : art_cols) row[col] = 0;
  }

  std::vector<Rat> phase2(t.ncols, Rat(0));
  for (int j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  t.set_objective(phase2);
  const SimplexStatus st = t.iterate();
  if (st == SimplexStatus::Unbounded) return {SimplexStatus::Unbounded, Rat(0), {}};

  SimplexResult res;
  res.status = SimplexStatus::Optimal;
  res.solution.assign(n, Rat(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.basis[r] < n) res.solution[t.basis[r]] = t.rows[r][t.ncols];
  res.objective_value = -t.obj[t.ncols];
  return res;
}

} // namespace rif
