#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glat/cohomology.hpp"
#include "glat/lattice.hpp"

namespace glat {

// Short exact sequence 0 -> kernel -> p --cover--> m -> 0 where p is a
// direct sum of coset lattices Z[G/U] (one summands entry per block, in
// order) and the cover hits every fixed point: cover(p^u) = m^u for every
// subgroup u. That property is what makes the kernel H1-trivial over every
// subgroup; both facts are checked on construction.
struct CoflasqueCover {
  GLattice m;
  GLattice p;                  // permutation in its basis
  IntMatrix cover;             // m.rank x p.rank, equivariant
  GLattice kernel;             // saturated, with the induced action
  IntMatrix kernel_embedding;  // p.rank x kernel.rank, Hermite-reduced
  std::vector<Subgroup> summands;
};

// Builds the cover economically: subgroup-conjugacy representatives are
// visited from the whole group down, and each contributes one Z[G/U] summand
// per generator of m^U not already covered by the fixed points of the part
// built so far.
CoflasqueCover coflasque_cover(const GLattice& m);

// Outcome of a flasque/coflasque test; on failure, the first subgroup in
// canonical order with nontrivial H1 and the value found there.
struct FlasqueCheck {
  bool holds = false;
  std::optional<Subgroup> witness;
  FiniteAbelianGroup obstruction;
};

// H1(u, n) = 0 for every subgroup u.
FlasqueCheck is_coflasque(const GLattice& n);
// H1(u, dual(n)) = 0 for every subgroup u.
FlasqueCheck is_flasque(const GLattice& n);

// Exact sequence 0 -> m --inject--> s --project--> f -> 0 with s permutation
// in its basis and f flasque. Verified on construction: both maps are
// equivariant, inject is injective with saturated image equal to the kernel
// of project, and project is surjective.
struct FlasqueResolution {
  GLattice m;
  GLattice s;
  GLattice f;
  IntMatrix inject;   // s.rank x m.rank
  IntMatrix project;  // f.rank x s.rank
  std::vector<Subgroup> summands;  // coset blocks of s; empty for shortcut
  std::string note;
};

// Dualizes coflasque_cover(dual(m)). When m is already permutation in its
// given basis this shortcuts to s = m, f = 0.
FlasqueResolution flasque_resolution(const GLattice& m);

// "Z[G/<rho>] + 2 Z[G/<e>]" style rendering of a coset-block list ("-" when
// empty). Consecutive equal subgroups are merged with a multiplicity.
std::string summand_description(const std::vector<Subgroup>& summands);

// Caps for the bounded padded-isomorphism search. All are echoed in the
// SearchRecord so an Unknown outcome pins down exactly what was tried.
inline constexpr long kPadTotalBudget = 40000;  // candidates across all pairs
inline constexpr long kPadPairCap = 4000;       // candidates within one pair
inline constexpr int kPadPairBudget = 500;      // padding pairs generated

// One bounded deterministic search for a unimodular equivariant map
// a + P -> b + Q over pairs of coset-lattice paddings P, Q with matching
// total rank <= rank_bound.
struct SearchRecord {
  int rank_bound = 0;
  int coeff_bound = 0;
  long total_budget = kPadTotalBudget;
  long pair_cap = kPadPairCap;
  int pair_budget = kPadPairBudget;
  int pairs_tried = 0;
  long candidates_tried = 0;
  bool exhausted = false;  // every admissible pair was fully searched
  enum Outcome { Proven, Unknown } outcome = Unknown;
  std::string left_padding;   // summands added to a ("-" if none)
  std::string right_padding;  // summands added to b
  std::optional<IntMatrix> witness;
  std::string detail;
};

SearchRecord padded_iso_search(const GLattice& a, const GLattice& b,
                               int rank_bound, int coeff_bound);

// Refutation certificate or honest consistency report for "n plus some
// permutation summand is a permutation lattice". The refutation is a
// nontrivial H1 entry of n or of dual(n); the consistent verdict is not a
// proof and says so when rendered.
struct ObstructionReport {
  std::string lattice_name;
  CohomologyProfile profile;       // of n
  CohomologyProfile profile_dual;  // of dual(n)
  enum Kind {
    NotStablyPermutation,
    ConsistentWithStablyPermutation
  } verdict = ConsistentWithStablyPermutation;
  // Nontrivial entry found scanning subgroups largest-first, so a
  // whole-group obstruction wins when several exist.
  std::optional<Subgroup> witness;
  FiniteAbelianGroup obstruction;  // the entry found there
  bool witness_on_dual = false;    // it came from the dual profile
  std::optional<SearchRecord> bounded_search;  // only when consistent
};

// rank_bound < 0 means rank(n) + 8.
ObstructionReport stably_permutation_verdict(const GLattice& n,
                                             int rank_bound = -1,
                                             int coeff_bound = 3);

// Whether a + P and b + Q are equivariantly isomorphic for some coset
// paddings P, Q. NotSimilar is certified by a differing H1 entry (per
// subgroup, on the lattices or their duals); Similar by an explicit witness;
// Unknown reports the bounded search that failed to decide. When the groups
// differ they are identified through equally named generators.
struct SimilarityReport {
  enum Kind { Similar, NotSimilar, Unknown } verdict = Unknown;
  std::string detail;
  std::optional<Subgroup> witness;  // subgroup with differing H1, largest-first scan
  FiniteAbelianGroup invariant_a, invariant_b;
  bool witness_on_dual = false;
  std::optional<SearchRecord> search;
};

// rank_bound < 0 means max(rank a, rank b) + 8.
SimilarityReport similarity_verdict(const GLattice& a, const GLattice& b,
                                    int rank_bound = -1, int coeff_bound = 3);

}  // namespace glat
