#pragma once

// Built-in lattices: the two rank-3 torus lattices (Klein four group and its
// order-8 extension by -I) and the conic-bundle family N_n over C2 x C2.

#include <glat/lattice.hpp>

namespace glat {

// Rank-3 lattice over the order-4 group <rho, sigma>.
GLattice torus_pi_lattice();

// Rank-3 lattice over the order-8 group <rho, sigma, g> where g = -I.
GLattice torus_w_lattice();

// Picard lattice N_n of the conic bundle with 4n+2 degenerate fibres,
// rank 4n+4, over W_n = <sigma, g> = C2 x C2. Basis order:
//   s, l, l_1 .. l_2n, l_-1 .. l_-2n, l_0, l_inf.
// sigma: l_k -> l - l_-k, l_0 -> l - l_0, l_inf -> l - l_inf, l fixed,
//   s -> s + (2n+1) l - sum_k (l_k + l_-k) - l_0 - l_inf.
// g: swaps l_k and l_-k, fixes s, l, l_0, l_inf (g(s) = s by convention;
// the basis section is taken to be g-invariant).
// Throws InputError for n < 1.
GLattice trepalin_lattice(int n);

// The hand-written generators of the sigma-fixed sublattice of N_n, as
// columns: 2s - sum_k (l_k + l_-k) - l_0 - l_inf, then l, then
// l_k - l_-k for k = 1..2n. For comparison against fixed_sublattice output.
IntMatrix trepalin_fixed_generators(int n);

// Checks 2(sigma(s) - s) = sum over fibre components L of (sigma(L) - L),
// where sigma(s) is read off the built matrix and sigma(L) is expanded by
// the component rules. sigma_s_l_offset perturbs the coefficient of l in
// sigma(s) before comparing; nonzero offsets serve as negative controls.
bool trepalin_sigma_s_consistency(int n, long sigma_s_l_offset = 0);

}  // namespace glat
