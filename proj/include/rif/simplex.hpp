#pragma once

#include "rif/numeric.hpp"

#include <vector>

namespace rif {

enum class Relation { LessEq, GreaterEq, Equal };

struct LPRow {
  std::vector<Rat> coeffs;
  Relation rel = Relation::LessEq;
  Rat rhs;
};

// maximize objective·x subject to rows, x ≥ 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rat> objective;
  std::vector<LPRow> rows;
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::Optimal;
  Rat objective_value;
  std::vector<Rat> solution;
};

// Two-phase primal simplex over exact rationals, Bland's rule throughout.
SimplexResult solve_lp(const LinearProgram& lp);

} // namespace rif
