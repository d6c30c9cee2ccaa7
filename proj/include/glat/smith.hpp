#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glat/int_matrix.hpp"

namespace glat {

// U * A * V = D with U, V unimodular and D diagonal, diagonal entries
// nonnegative, each dividing the next.
struct SmithForm {
  IntMatrix left;    // U, rows x rows
  IntMatrix diag;    // D, same shape as A
  IntMatrix right;   // V, cols x cols
  int rank = 0;      // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& a);

// Canonical column Hermite form of the column lattice of b: column echelon
// with pivot rows strictly increasing, positive pivots, entries left of a
// pivot reduced into [0, pivot). Zero columns are dropped. Two matrices span
// the same column lattice iff their Hermite forms are equal.
IntMatrix hermite_column(const IntMatrix& b);

// Basis of { x : a*x = 0 } as columns; saturated by construction and
// returned in Hermite form so the output is deterministic.
IntMatrix kernel_basis(const IntMatrix& a);

// Invariant-factor presentation of a finitely generated abelian group:
// Z^free_rank  x  Z/d1 x ... x Z/dk  with 2 <= d1 | d2 | ... | dk.
struct FiniteAbelianGroup {
  std::vector<mpz_class> invariant_factors;
  int free_rank = 0;

  bool trivial() const { return invariant_factors.empty() && free_rank == 0; }
  bool finite() const { return free_rank == 0; }
  mpz_class order() const;  // requires finite()
  bool operator==(const FiniteAbelianGroup& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
  bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }
  FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& o) const;
  // "0", "(2,4)", "Z^2", or "Z^1 x (3)".
  std::string to_string() const;
};

// Structure of span(ambient_basis) / span(sub_generators). Columns of
// ambient_basis must be independent; every column of sub_generators must lie
// in the ambient lattice (checked, SubNotContained otherwise).
FiniteAbelianGroup quotient_structure(const IntMatrix& ambient_basis,
                                      const IntMatrix& sub_generators);

// X with a*X = b over Z, or nullopt if no integral solution exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

}  // namespace glat
