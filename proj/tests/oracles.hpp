#pragma once

// Test-side oracles. Nothing here calls into the library's decomposition or
// kernel code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <vector>

namespace oracle {

using Cx = std::complex<double>;
using Dense = std::vector<std::vector<Cx>>;
using Perm = std::vector<unsigned>;

inline Cx character(int j, int x, int n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * j * x / n);
}

/// Kernel n * P for the span of the characters chi_j of C_n, j in `js`:
/// K(y, x) = sum_j chi_j(y) conj(chi_j(x)).
inline Dense cyclic_character_kernel(int n, const std::vector<int>& js) {
  Dense k(n, std::vector<Cx>(n));
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      for (int j : js) k[y][x] += character(j, y, n) * std::conj(character(j, x, n));
    }
  }
  return k;
}

/// Closure by repeated multiplication until nothing new appears.
inline std::set<Perm> brute_force_closure(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  for (unsigned i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> all{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(all.begin(), all.end());
    for (const auto& a : snapshot) {
      for (const auto& g : gens) {
        Perm c(degree);
        for (unsigned i = 0; i < degree; ++i) c[i] = g[a[i]];
        grew |= all.insert(c).second;
      }
    }
  }
  return all;
}

}  // namespace oracle
