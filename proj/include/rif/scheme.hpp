#pragma once

#include "rif/family.hpp"
#include "rif/matrix.hpp"
#include "rif/numeric.hpp"

#include <vector>

namespace rif {

// Exact eigenvalue data of the Johnson scheme J(n,k).
// P(j,i) is the eigenvalue of A_i on the j-th eigenspace; Q(i,j) its dual,
// obtained as v·P^{-1}; r[i] the valencies; f[j] the multiplicities.
struct SchemeTables {
  int n = 0;
  int k = 0;
  Int v;
  Mat<Int> P;
  Mat<Rat> Q;
  std::vector<Int> r;
  std::vector<Int> f;
};

// Alternating-sum form of the Johnson scheme eigenvalue.
Int eigenvalue_P(int n, int k, int j, int i);

// Independent second form of the same eigenvalue; agrees with eigenvalue_P.
Int eigenvalue_P_second(int n, int k, int j, int i);

SchemeTables scheme_tables(int n, int k);

// Closed form for Q_{i1} and Q_{i2}; cross-checks the inverted tables.
Rat dual_eigenvalue_closed(int n, int k, int i, int j);
Rat dual_eigenvalue_closed(const SchemeTables& tables, int i, int j);

// Entry j of aQ = Σ_i Q_{ij} a_i. Nonnegative for any genuine family.
std::vector<Rat> macwilliams_transform(const SchemeTables& tables, const InnerDistribution& dist);

// γ_0..γ_{k−1}: γ_i = −i(n−2)(kn−in−k²+i), the combination c₂Q_{i2} − (k−1)(n−k−1)c₁Q_{i1}.
std::vector<Int> gamma_coefficients(int n, int k);

enum class LPStatus { Optimal, Infeasible };

struct LPOutcome {
  Rat optimum;
  std::vector<Rat> witness; // a_1..a_{k−1}
  LPStatus status = LPStatus::Optimal;
};

// Delsarte LP maximum of 1 + Σ a_i over inner distributions of intersecting
// families (a_0 = 1, a_k = 0, aQ ≥ 0), optionally with the regularity
// constraint Σ (kn−in−k²) a_i = 0. Exact rational simplex.
LPOutcome lp_max_regular_intersecting(int n, int k, bool require_regular);

} // namespace rif
