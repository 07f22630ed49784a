#pragma once

#include <utility>
#include <vector>

namespace rif {

// Calls fn on every m-subset of {1..n} as a sorted vector, in lexicographic order.
template <class Fn>
void for_each_combination(int n, int m, Fn&& fn) {
  if (m < 0 || m > n) return;
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) c[i] = i + 1;
  while (true) {
    fn(std::as_const(c));
    int i = m - 1;
    while (i >= 0 && c[i] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
  }
}

} // namespace rif
