#pragma once

#include "rif/family.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rif {

enum class Strategy { CyclicOrbit, DFS };

struct SearchOptions {
  std::optional<std::int64_t> target; // DFS: absent = auto-descend from general_bound
  double time_limit_seconds = 0;      // 0 = unlimited
  std::uint64_t seed = 0;             // recorded for reproducibility; searches are deterministic
  int threads = 1;
  int n_limit = 30;                   // cyclic strategy refuses larger ground sets
};

struct SearchResult {
  std::optional<KSetFamily> family;
  std::int64_t size = 0;
  Strategy strategy = Strategy::DFS;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::chrono::duration<double> elapsed{0};
  std::uint64_t explored_nodes = 0;
};

// Maximum-weight union of pairwise cross-intersecting, internally intersecting
// Z_n-orbits of k-subsets (exact weighted clique over the orbit graph).
SearchResult cyclic_orbit_search(int n, int k, const SearchOptions& options = {});

// Lexicographic DFS over k-subsets with degree-cap, capacity and size pruning;
// finds a regular intersecting family of exactly the target size, or proves
// none exists. Auto mode descends through admissible targets from general_bound.
SearchResult dfs_search(int n, int k, const SearchOptions& options = {});

struct CertificateCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  bool all_pass = false;
};

// Re-verifies a search witness from scratch: regular, intersecting, degree
// bookkeeping, inner distribution, MacWilliams nonnegativity, global bound.
CertificateReport verify_certificate(const SearchResult& result);

} // namespace rif
