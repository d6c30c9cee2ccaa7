#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glat/group.hpp"
#include "glat/int_matrix.hpp"

namespace glat {

// A free Z-module of finite rank with an action of a finite matrix group:
// action[i] is the matrix of elements[i], column convention (vectors are
// columns, action[i] * v). The action is a homomorphism into GL(rank, Z);
// it need not be faithful.
struct GLattice {
  GroupPtr group;
  int rank = 0;
  std::vector<IntMatrix> action;  // indexed like group->elements
  std::vector<std::string> basis_labels;  // empty or size rank
  std::string name;

  const IntMatrix& act(int e) const { return action[e]; }
};

// Extends generator images to the whole group along element words and
// verifies the result is a homomorphism on the full multiplication table.
GLattice make_lattice(const GroupPtr& g,
                      const std::vector<std::pair<std::string, IntMatrix>>& action_gens,
                      std::vector<std::string> basis_labels = {},
                      std::string name = "");

// The group acting on itself by its defining matrices (rank = degree).
GLattice lattice_from_group_matrices(const GroupPtr& g, std::string name);

// Wraps one matrix per group element as a lattice; the full multiplication
// table is verified to map to matrix products.
GLattice lattice_from_element_matrices(const GroupPtr& g,
                                       std::vector<IntMatrix> action,
                                       std::string name = "");

// Re-expresses n over g, which must be isomorphic to n.group through equally
// named generators (GroupMismatch otherwise).
GLattice change_group(const GLattice& n, const GroupPtr& g);

// Z[G/H] with basis the left cosets of h, ordered by smallest member.
GLattice permutation_lattice(const GroupPtr& g, const Subgroup& h);

// Kernel of the augmentation Z[G] -> Z in the basis {x - e : x != e}.
GLattice augmentation_ideal(const GroupPtr& g);

// Contragredient action g |-> transpose(action(g^-1)).
GLattice dual(const GLattice& n);

GLattice direct_sum(const GLattice& a, const GLattice& b);

// Same module, action restricted to the subgroup (re-enumerated as a group
// in its own right, generators named by their words in the parent).
GLattice restrict(const GLattice& n, const Subgroup& u);

// Basis of the saturated sublattice fixed pointwise by the listed elements,
// as columns, Hermite-reduced.
IntMatrix fixed_basis(const GLattice& n, const std::vector<int>& members);

// Fixed sublattice N^u together with its embedding. Requires u normal
// (NotNormal otherwise); the full group acts on the result through the
// quotient by u.
std::pair<GLattice, IntMatrix> fixed_sublattice(const GLattice& n,
                                                const Subgroup& u);

// Every action matrix is a permutation matrix in the given basis.
bool is_permutation_in_basis(const GLattice& n);

bool same_group(const GroupPtr& a, const GroupPtr& b);

// Z-basis of the equivariant maps a -> b (matrices X with
// X * a.act(g) = b.act(g) * X for all g).
struct LatticeMorphismSpace {
  int source_rank = 0;
  int target_rank = 0;
  std::vector<IntMatrix> basis;
};

LatticeMorphismSpace morphism_space(const GLattice& a, const GLattice& b);

// Cap on combinations tried in one bounded search, so every search
// terminates quickly even when the morphism space is large. Reported along
// with the bounds, so an Unknown outcome is reproducible.
inline constexpr long kIsoSearchBudget = 40000;

struct IsoSearchResult {
  enum Kind { Proven, Refuted, Unknown } kind = Unknown;
  std::optional<IntMatrix> witness;  // unimodular intertwiner when Proven
  std::string detail;
  long candidates_tried = 0;
  bool search_exhausted = false;
};

// Decision order: equal tables -> Proven(identity); then rank, per-subgroup
// fixed ranks, per-subgroup H1 of the lattices and of their duals (Refuted
// on any mismatch); then a bounded deterministic coefficient search over the
// morphism space. Witnesses are re-verified before returning.
IsoSearchResult equivariant_iso_search(const GLattice& a, const GLattice& b,
                                       int coeff_bound = 3);

// Deterministic search for a unimodular intertwiner among integer
// combinations of the given morphism basis with coefficients bounded by
// coeff_bound, trying at most max_candidates combinations.
IsoSearchResult unimodular_combination_search(
    const std::vector<IntMatrix>& basis, const GLattice& a, const GLattice& b,
    int coeff_bound, long max_candidates);

}  // namespace glat
