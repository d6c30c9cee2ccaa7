#pragma once

#include <vector>

#include "glat/lattice.hpp"
#include "glat/smith.hpp"

namespace glat {

// Rank of the sublattice fixed by the whole group.
int h0(const GLattice& n);

// First group cohomology of the acting group with coefficients in n,
// computed from the degree-2 truncation of the bar complex: the quotient of
// the integer kernel of the 1->2 differential (the cocycle condition
// f(gh) = f(g) + g.f(h), enumerated over all pairs (g,h)) by the image of
// the 0->1 differential (coboundaries n |-> (g |-> g.n - n)). Always finite.
FiniteAbelianGroup h1(const GLattice& n);

// Independent route for cyclic groups: ker(norm) / im(g - 1), where g is
// the given generating element.
FiniteAbelianGroup h1_cyclic(const GLattice& n, int generator_element);

// H1 over every subgroup, in the canonical subgroups() order. Conjugate
// subgroups get their own entries.
struct CohomologyProfile {
  std::vector<Subgroup> subgroups;
  std::vector<FiniteAbelianGroup> entries;

  bool all_trivial() const;
};

CohomologyProfile h1_profile(const GLattice& n);

}  // namespace glat
