#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "glat/int_matrix.hpp"
#include "glat/smith.hpp"

namespace glat {

// A finite subgroup of GL(degree, Z), fully enumerated. Element 0 is the
// identity; enumeration order is breadth-first over generator words with
// generators in input order, so it is deterministic for a given input.
class FiniteMatrixGroup {
 public:
  int degree = 0;
  std::vector<std::string> generator_names;
  std::vector<IntMatrix> generator_matrices;
  std::vector<IntMatrix> elements;
  std::vector<std::vector<int>> element_words;  // generator indices
  std::vector<std::vector<int>> mul;            // mul[i][j] = index of ei*ej
  std::vector<int> inv;
  std::string decomposition_note;  // set by direct_product_action

  int order() const { return static_cast<int>(elements.size()); }
  int index_of(const IntMatrix& m) const;  // -1 if absent
  std::string word_name(int e) const;      // "e" or "rho*sigma"
  bool is_abelian() const;
  // Generator element indices (identity generators dropped, duplicates kept
  // once), in input order.
  std::vector<int> generator_element_indices() const;

  std::map<IntMatrix, int, IntMatrixLess> index;
};

using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

// Closes the generators under multiplication. Throws NotUnimodular if a
// generator has determinant other than +-1, NotFinite past element_cap.
GroupPtr generate(int degree,
                  const std::vector<std::pair<std::string, IntMatrix>>& gens,
                  int element_cap = 10000);

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted element indices, always contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int e) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

// All subgroups, sorted by (order, member list). Includes the trivial
// subgroup and the whole group.
std::vector<Subgroup> subgroups(const GroupPtr& g);

// Indices (into the subgroups() list) of one representative per conjugacy
// class: the lexicographically smallest member list of the class.
std::vector<int> subgroup_conjugacy_representatives(
    const GroupPtr& g, const std::vector<Subgroup>& subs);

// Smallest subgroup containing the given elements.
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& elems);

bool is_normal(const Subgroup& u);

// Cyclic test; returns an element index generating the whole group, or -1.
int cyclic_generator(const GroupPtr& g);

// Group generated by the union of generators. Requires equal degree and that
// every element of a commutes with every element of b (checked).
GroupPtr direct_product_action(const GroupPtr& a, const GroupPtr& b,
                               int element_cap = 10000);

// Invariant factors of an abelian group (NotAbelian otherwise).
FiniteAbelianGroup abelian_invariants(const GroupPtr& g);

// Deterministic small generating set of a subgroup: scan members in index
// order, keep those that enlarge the closure.
std::vector<int> subgroup_generators(const Subgroup& u);

// phi[e] = the element of b whose generator word matches the word of e in a,
// pairing generators by name. Verified to be a bijective homomorphism of the
// multiplication tables; GroupMismatch otherwise.
std::vector<int> isomorphism_by_generator_names(const GroupPtr& a,
                                                const GroupPtr& b);

// Short display label for a subgroup: its generator words, e.g. "<rho,g>".
std::string subgroup_label(const Subgroup& u);

}  // namespace glat
