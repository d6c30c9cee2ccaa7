#include <doctest.h>

#include "glat/cohomology.hpp"
#include "glat/lattice.hpp"
#include "support/bar_oracle.hpp"

using namespace glat;

namespace {

GroupPtr c2_swap() {
  IntMatrix s{{0, 1}, {1, 0}};
  return generate(2, {{"s", s}});
}

GroupPtr klein_three() {
  IntMatrix a{{0, 0, 1}, {-1, -1, -1}, {1, 0, 0}};
  IntMatrix b{{-1, -1, -1}, {0, 0, 1}, {0, 1, 0}};
  return generate(3, {{"rho", a}, {"sigma", b}});
}

void check_all_routes(const GLattice& n, const std::string& expect) {
  FiniteAbelianGroup a = h1(n);
  CHECK(a.to_string() == expect);
  CHECK(glat_test::h1_bar_naive(n).to_string() == expect);
  int gen = cyclic_generator(n.group);
  if (gen >= 0) CHECK(h1_cyclic(n, gen).to_string() == expect);
}

}  // namespace

TEST_CASE("h0 is the fixed rank") {
  auto g = klein_three();
  GLattice reg = lattice_from_group_matrices(g, "regular");
  CHECK(h0(reg) == 0);
  GLattice p = permutation_lattice(g, subgroups(g)[1]);
  CHECK(h0(p) == 1);
}

TEST_CASE("sign lattice over an involution") {
  auto g = c2_swap();
  GLattice s = make_lattice(g, {{"s", IntMatrix{{-1}}}}, {}, "sign");
  check_all_routes(s, "(2)");
}

TEST_CASE("permutation lattices are cohomologically trivial in degree one") {
  auto g = klein_three();
  for (const auto& u : subgroups(g)) {
    GLattice p = permutation_lattice(g, u);
    check_all_routes(p, "0");
    CohomologyProfile prof = h1_profile(p);
    CHECK(prof.all_trivial());
    for (const auto& e : prof.entries) CHECK(e.order() == 1);
  }
}

TEST_CASE("augmentation ideal of the Klein group") {
  auto g = klein_three();
  GLattice ig = augmentation_ideal(g);
  check_all_routes(ig, "(4)");
}

TEST_CASE("h1 of a direct sum splits") {
  auto g = c2_swap();
  GLattice s = make_lattice(g, {{"s", IntMatrix{{-1}}}}, {}, "sign");
  GLattice reg = lattice_from_group_matrices(g, "regular");
  CHECK(h1(direct_sum(s, s)).to_string() == "(2,2)");
  CHECK(h1(direct_sum(s, reg)).to_string() == "(2)");
}

TEST_CASE("cyclic route agrees with the generic one on every cyclic subgroup") {
  auto g = klein_three();
  GLattice ig = augmentation_ideal(g);
  for (const auto& u : subgroups(g)) {
    GLattice r = restrict(ig, u);
    int gen = cyclic_generator(r.group);
    if (gen < 0) continue;
    CHECK(h1(r).to_string() == h1_cyclic(r, gen).to_string());
  }
}

TEST_CASE("profile is trivial at the trivial subgroup and iso-invariant") {
  auto g = c2_swap();
  IntMatrix t{{3, 1}, {2, 1}};
  IntMatrix ti = unimodular_inverse(t);
  GLattice reg = lattice_from_group_matrices(g, "regular");
  GLattice conj = make_lattice(g, {{"s", t * g->elements[1] * ti}}, {}, "conj");
  CohomologyProfile a = h1_profile(reg);
  CohomologyProfile b = h1_profile(conj);
  REQUIRE(a.entries.size() == b.entries.size());
  CHECK(a.entries.front().order() == 1);
  for (size_t i = 0; i < a.entries.size(); ++i)
    CHECK(a.entries[i].to_string() == b.entries[i].to_string());
}

TEST_CASE("dual profile separates a lattice from its dual") {
  // Over the Klein group the augmentation ideal and its dual differ in h1.
  auto g = klein_three();
  GLattice ig = augmentation_ideal(g);
  GLattice igd = dual(ig);
  CHECK(h1(ig).to_string() == "(4)");
  CHECK(h1(igd).to_string() != "(4)");
}

TEST_CASE("bar oracle agrees on a rank-two mixed lattice") {
  auto g = c2_swap();
  GLattice m = make_lattice(g, {{"s", IntMatrix{{-1, 1}, {0, 1}}}}, {}, "mixed");
  CHECK(h1(m).to_string() == glat_test::h1_bar_naive(m).to_string());
}
