#pragma once

// Literal bar-complex H1 for cross-checking: builds the full 1->2
// differential over all pairs (no elimination tricks) and quotients its
// kernel by the coboundaries. Slow; only for small inputs in tests.

#include "glat/cohomology.hpp"
#include "glat/lattice.hpp"
#include "glat/smith.hpp"

namespace glat_test {

inline glat::FiniteAbelianGroup h1_bar_naive(const glat::GLattice& n) {
  using namespace glat;
  const FiniteMatrixGroup& g = *n.group;
  const int N = g.order();
  const int r = n.rank;
  if (N == 1 || r == 0) return {};
  IntMatrix d1(N * N * r, N * r);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const int base = (a * N + b) * r;
      for (int i = 0; i < r; ++i) {
        d1.at(base + i, g.mul[a][b] * r + i) += 1;
        d1.at(base + i, a * r + i) -= 1;
      }
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          d1.at(base + i, b * r + j) -= n.action[a].at(i, j);
    }
  IntMatrix z = kernel_basis(d1);
  IntMatrix d0(N * r, r);
  for (int x = 0; x < N; ++x)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        d0.at(x * r + i, j) =
            n.action[x].at(i, j) - (i == j ? 1 : 0);
  return quotient_structure(z, d0);
}

}  // namespace glat_test
