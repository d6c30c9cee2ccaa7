#include <doctest.h>

#include <random>

#include "glat/errors.hpp"
#include "glat/smith.hpp"

using namespace glat;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

// Product of random elementary row/column operations: always det +-1.
IntMatrix random_unimodular(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2), flip(0, 1);
  IntMatrix m = IntMatrix::identity(n);
  for (int step = 0; step < 4 * n; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    mpz_class q = coef(rng);
    if (flip(rng))
      for (int c = 0; c < n; ++c) m.at(i, c) += q * m.at(j, c);
    else
      for (int r = 0; r < n; ++r) m.at(r, i) += q * m.at(r, j);
  }
  return m;
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  IntMatrix a{{2, 0}, {0, 3}};
  SmithForm s = smith_normal_form(a);
  CHECK(s.rank == 2);
  CHECK(s.diag.at(0, 0) == 1);
  CHECK(s.diag.at(1, 1) == 6);
}

TEST_CASE("smith normal form reconstructs the input") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 5);
    SmithForm s = smith_normal_form(a);
    IntMatrix back = unimodular_inverse(s.left) * s.diag * unimodular_inverse(s.right);
    CHECK(back == a);
    CHECK(abs(s.left.determinant()) == 1);
    CHECK(abs(s.right.determinant()) == 1);
  }
}

TEST_CASE("smith invariants are unchanged by unimodular row/column changes") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5, 4);
    IntMatrix p = random_unimodular(rng, 4), q = random_unimodular(rng, 5);
    SmithForm s1 = smith_normal_form(a), s2 = smith_normal_form(p * a * q);
    CHECK(s1.diag == s2.diag);
  }
}

TEST_CASE("kernel of [1 1] is the span of (1,-1)") {
  IntMatrix a{{1, 1}};
  IntMatrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) * k.at(1, 0) == -1);
}

TEST_CASE("kernel basis is saturated and satisfies rank-nullity") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), 5);
    SmithForm s = smith_normal_form(a);
    IntMatrix k = kernel_basis(a);
    CHECK(k.cols() == a.cols() - s.rank);
    CHECK((a * k).is_zero());
    if (k.cols() > 0) {
      // Saturated: the quotient of the kernel's rational closure is free.
      SmithForm sk = smith_normal_form(k);
      for (int t = 0; t < sk.rank; ++t) CHECK(sk.diag.at(t, t) == 1);
    }
  }
}

TEST_CASE("kernel basis is deterministic (Hermite-reduced)") {
  IntMatrix a{{2, 4, 6}, {1, 2, 3}};
  CHECK(kernel_basis(a) == kernel_basis(a));
  IntMatrix k = kernel_basis(a);
  CHECK(k == hermite_column(k));
}

TEST_CASE("hermite form identifies equal column lattices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix b = random_matrix(rng, 4, 4, 4);
    IntMatrix t = random_unimodular(rng, 4);
    CHECK(hermite_column(b) == hermite_column(b * t));
  }
}

TEST_CASE("quotient of Z^2 by span{(2,0),(0,3)} is Z/6") {
  IntMatrix amb = IntMatrix::identity(2);
  IntMatrix sub{{2, 0}, {0, 3}};
  FiniteAbelianGroup q = quotient_structure(amb, sub);
  CHECK(q.free_rank == 0);
  REQUIRE(q.invariant_factors.size() == 1);
  CHECK(q.invariant_factors[0] == 6);
  CHECK(q.to_string() == "(6)");
}

TEST_CASE("quotient of Z^2 by 2Z^2 is (2,2)") {
  IntMatrix sub{{2, 0}, {0, 2}};
  FiniteAbelianGroup q = quotient_structure(IntMatrix::identity(2), sub);
  CHECK(q.invariant_factors.size() == 2);
  CHECK(q.invariant_factors[0] == 2);
  CHECK(q.invariant_factors[1] == 2);
  CHECK(q.order() == 4);
}

TEST_CASE("quotient detects generators outside the ambient lattice") {
  IntMatrix amb{{2, 0}, {0, 2}};
  IntMatrix sub{{1, 0}, {0, 1}};
  CHECK_THROWS_AS(quotient_structure(amb, sub), SubNotContained);
}

TEST_CASE("quotient structure with free part") {
  IntMatrix amb = IntMatrix::identity(3);
  IntMatrix sub(3, 1);
  sub.at(0, 0) = 2;
  FiniteAbelianGroup q = quotient_structure(amb, sub);
  CHECK(q.free_rank == 2);
  REQUIRE(q.invariant_factors.size() == 1);
  CHECK(q.invariant_factors[0] == 2);
  CHECK(q.to_string() == "Z^2 x (2)");
}

TEST_CASE("quotient is invariant under a change of sub generators") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix sub = random_matrix(rng, 4, 4, 4);
    IntMatrix t = random_unimodular(rng, 4);
    FiniteAbelianGroup q1 = quotient_structure(IntMatrix::identity(4), sub);
    FiniteAbelianGroup q2 = quotient_structure(IntMatrix::identity(4), sub * t);
    CHECK(q1 == q2);
  }
}

TEST_CASE("integer solve finds exact solutions and rejects non-solvable systems") {
  IntMatrix a{{2, 0}, {0, 2}};
  IntMatrix b1{{4}, {6}};
  auto x = solve_integer(a, b1);
  REQUIRE(x.has_value());
  CHECK(a * *x == b1);
  IntMatrix b2{{1}, {0}};
  CHECK(!solve_integer(a, b2).has_value());
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a.determinant() == -2);
  IntMatrix b{{2, 0, 1}, {0, 1, 0}, {1, 0, 1}};
  CHECK(b.determinant() == 1);
  CHECK(IntMatrix::identity(5).determinant() == 1);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix u = random_unimodular(rng, 5);
    CHECK(abs(u.determinant()) == 1);
    CHECK((u * unimodular_inverse(u)).is_identity());
  }
}

TEST_CASE("abelian group rendering and direct sums") {
  FiniteAbelianGroup t;
  CHECK(t.trivial());
  CHECK(t.to_string() == "0");
  FiniteAbelianGroup z2{{2}, 0}, z2b{{2}, 0};
  FiniteAbelianGroup s = z2.direct_sum(z2b);
  CHECK(s.to_string() == "(2,2)");
  FiniteAbelianGroup z6{{6}, 0};
  FiniteAbelianGroup mixed = z2.direct_sum(z6);
  CHECK(mixed.to_string() == "(2,6)");
  FiniteAbelianGroup z4{{4}, 0};
  // (2)+(4): chain stays 2 | 4.
  CHECK(z2.direct_sum(z4).to_string() == "(2,4)");
  CHECK(z2.direct_sum(FiniteAbelianGroup{{}, 1}).to_string() == "Z^1 x (2)");
}
