#include <doctest.h>

#include "glat/errors.hpp"
#include "glat/lattice.hpp"

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

GLattice sign_lattice(const GroupPtr& c2) {
  return make_lattice(c2, {{"s", IntMatrix{{-1}}}}, {}, "sign");
}

}  // namespace

TEST_CASE("make_lattice extends generators and validates the action") {
  auto g = c2_swap();
  GLattice n = sign_lattice(g);
  CHECK(n.rank == 1);
  CHECK(n.action[0].is_identity());
  CHECK(n.action[1].at(0, 0) == -1);
  // An involution cannot act with order 4.
  IntMatrix rot{{0, -1}, {1, 0}};
  CHECK_THROWS_AS(make_lattice(g, {{"s", rot}}), InputError);
}

TEST_CASE("permutation lattice of the regular action") {
  auto g = klein_three();
  auto subs = subgroups(g);
  GLattice reg = permutation_lattice(g, subs.front());
  CHECK(reg.rank == 4);
  CHECK(is_permutation_in_basis(reg));
  CHECK(reg.basis_labels[0] == "[e]");
  // One orbit on the regular basis: fixed rank 1.
  std::vector<int> all = {0, 1, 2, 3};
  CHECK(fixed_basis(reg, all).cols() == 1);

  GLattice triv = permutation_lattice(g, subs.back());
  CHECK(triv.rank == 1);
  CHECK(triv.action[1].is_identity());
}

TEST_CASE("fixed rank of a permutation lattice counts orbits") {
  auto g = klein_three();
  auto subs = subgroups(g);
  for (const auto& h : subs) {
    GLattice p = permutation_lattice(g, h);
    for (const auto& u : subs) {
      // Count u-orbits on the coset basis via the permutation action.
      std::vector<int> seen(p.rank, 0);
      int orbits = 0;
      for (int c = 0; c < p.rank; ++c) {
        if (seen[c]) continue;
        ++orbits;
        std::vector<int> stack = {c};
        seen[c] = 1;
        while (!stack.empty()) {
          int cur = stack.back();
          stack.pop_back();
          for (int m : u.members)
            for (int i = 0; i < p.rank; ++i)
              if (p.action[m].at(i, cur) == 1 && !seen[i]) {
                seen[i] = 1;
                stack.push_back(i);
              }
        }
      }
      CHECK(fixed_basis(p, u.members).cols() == orbits);
    }
  }
}

TEST_CASE("augmentation ideal has corank one in the regular lattice") {
  auto g = klein_three();
  GLattice ig = augmentation_ideal(g);
  CHECK(ig.rank == 3);
  CHECK(ig.basis_labels[0] == "rho-e");
  // No invariants: the fixed sublattice under everything is zero.
  std::vector<int> all = {0, 1, 2, 3};
  CHECK(fixed_basis(ig, all).cols() == 0);
}

TEST_CASE("dual is an involution and fixes permutation lattices") {
  auto g = klein_three();
  GLattice ig = augmentation_ideal(g);
  GLattice dd = dual(dual(ig));
  CHECK(dd.action == ig.action);
  auto subs = subgroups(g);
  GLattice p = permutation_lattice(g, subs[2]);
  CHECK(dual(p).action == p.action);
}

TEST_CASE("restrict re-enumerates the subgroup with parent words as names") {
  auto g = klein_three();
  auto subs = subgroups(g);
  GLattice ig = augmentation_ideal(g);
  const Subgroup& u = subs[1];
  GLattice r = restrict(ig, u);
  CHECK(r.group->order() == 2);
  CHECK(r.rank == 3);
  CHECK(r.group->generator_names[0] == g->word_name(subgroup_generators(u)[0]));
  GLattice triv = restrict(ig, subs.front());
  CHECK(triv.group->order() == 1);
}

TEST_CASE("fixed sublattice is saturated and carries the residual action") {
  auto g = c2_swap();
  GLattice reg = lattice_from_group_matrices(g, "regular");
  auto subs = subgroups(g);
  auto [fix, emb] = fixed_sublattice(reg, subs.back());
  CHECK(fix.rank == 1);
  // The diagonal (1,1), not (2,2): saturation.
  CHECK(emb.at(0, 0) == 1);
  CHECK(emb.at(1, 0) == 1);
  CHECK(fix.action[1].is_identity());
}

TEST_CASE("fixed sublattice requires a normal subgroup") {
  IntMatrix s12{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  IntMatrix s123{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  auto s3 = generate(3, {{"t", s12}, {"c", s123}});
  GLattice n = lattice_from_group_matrices(s3, "natural");
  auto subs = subgroups(s3);
  bool threw = false;
  for (const auto& u : subs)
    if (!is_normal(u)) {
      CHECK_THROWS_AS(fixed_sublattice(n, u), NotNormal);
      threw = true;
    }
  CHECK(threw);
}

TEST_CASE("direct sum concatenates actions blockwise") {
  auto g = c2_swap();
  GLattice s = sign_lattice(g);
  GLattice reg = lattice_from_group_matrices(g, "regular");
  GLattice sum = direct_sum(s, reg);
  CHECK(sum.rank == 3);
  CHECK(sum.action[1].at(0, 0) == -1);
  CHECK(sum.action[1].at(1, 2) == 1);
}

TEST_CASE("morphism space of the regular lattice with itself") {
  auto g = c2_swap();
  GLattice reg = lattice_from_group_matrices(g, "regular");
  LatticeMorphismSpace sp = morphism_space(reg, reg);
  CHECK(sp.basis.size() == 2);  // identity and the swap
}

TEST_CASE("iso search proves identical lattices instantly") {
  auto g = klein_three();
  GLattice ig = augmentation_ideal(g);
  auto res = equivariant_iso_search(ig, ig);
  CHECK(res.kind == IsoSearchResult::Proven);
  CHECK(res.witness->is_identity());
}

TEST_CASE("iso search refutes on rank, then on invariants") {
  auto g = c2_swap();
  GLattice s = sign_lattice(g);
  GLattice reg = lattice_from_group_matrices(g, "regular");
  auto r1 = equivariant_iso_search(s, reg);
  CHECK(r1.kind == IsoSearchResult::Refuted);

  GLattice triv = make_lattice(g, {{"s", IntMatrix{{1}}}}, {}, "trivial");
  auto r2 = equivariant_iso_search(s, triv);
  CHECK(r2.kind == IsoSearchResult::Refuted);  // fixed ranks 0 vs 1
}

TEST_CASE("iso search finds a basis change witness") {
  auto g = c2_swap();
  GLattice reg = lattice_from_group_matrices(g, "regular");
  // Conjugate the regular action by a unimodular change of basis.
  IntMatrix t{{1, 1}, {0, 1}};
  IntMatrix ti = unimodular_inverse(t);
  GLattice conj = make_lattice(g, {{"s", t * g->elements[1] * ti}}, {}, "conj");
  auto res = equivariant_iso_search(reg, conj);
  REQUIRE(res.kind == IsoSearchResult::Proven);
  const IntMatrix& x = *res.witness;
  CHECK(abs(x.determinant()) == 1);
  CHECK(x * reg.action[1] == conj.action[1] * x);
}

TEST_CASE("combination search respects its budget and reports exhaustion") {
  auto g = c2_swap();
  GLattice s = sign_lattice(g);
  GLattice triv = make_lattice(g, {{"s", IntMatrix{{1}}}}, {}, "trivial");
  // Morphism space is zero; search is exhausted without candidates.
  auto sp = morphism_space(s, triv);
  CHECK(sp.basis.empty());
  auto res = unimodular_combination_search(sp.basis, s, triv, 3, 100);
  CHECK(res.kind == IsoSearchResult::Unknown);
  CHECK(res.search_exhausted);
}
