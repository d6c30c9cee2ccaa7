#include <doctest.h>

#include "glat/errors.hpp"
#include "glat/group.hpp"

using namespace glat;

namespace {

GroupPtr klein_three() {
  // Two commuting involutions acting on Z^3.
  IntMatrix a{{0, 0, 1}, {-1, -1, -1}, {1, 0, 0}};
  IntMatrix b{{-1, -1, -1}, {0, 0, 1}, {0, 1, 0}};
  return generate(3, {{"rho", a}, {"sigma", b}});
}

}  // namespace

TEST_CASE("generate enumerates a cyclic group of order 2") {
  IntMatrix neg = -IntMatrix::identity(3);
  auto g = generate(3, {{"m", neg}});
  CHECK(g->order() == 2);
  CHECK(g->elements[0].is_identity());
  CHECK(g->word_name(1) == "m");
  CHECK(g->inv[1] == 1);
}

TEST_CASE("generate rejects non-unimodular generators") {
  IntMatrix two{{2}};
  CHECK_THROWS_AS(generate(1, {{"t", two}}), NotUnimodular);
}

TEST_CASE("generate enforces the element cap") {
  // Order 6 rotation; cap of 3 must trip.
  IntMatrix rot{{0, -1}, {1, 1}};
  CHECK_THROWS_AS(generate(2, {{"r", rot}}, 3), NotFinite);
  CHECK(generate(2, {{"r", rot}})->order() == 6);
}

TEST_CASE("element order is breadth-first and identity is element 0") {
  auto g = klein_three();
  REQUIRE(g->order() == 4);
  CHECK(g->word_name(0) == "e");
  CHECK(g->word_name(1) == "rho");
  CHECK(g->word_name(2) == "sigma");
  CHECK(g->word_name(3) == "rho*sigma");
  CHECK(g->is_abelian());
}

TEST_CASE("multiplication table is consistent with matrix products") {
  auto g = klein_three();
  for (int i = 0; i < g->order(); ++i)
    for (int j = 0; j < g->order(); ++j)
      CHECK(g->elements[g->mul[i][j]] == g->elements[i] * g->elements[j]);
}

TEST_CASE("subgroup orders divide the group order") {
  auto g = klein_three();
  auto subs = subgroups(g);
  REQUIRE(subs.size() == 5);  // 1 + three C2 + whole
  for (const auto& u : subs) {
    CHECK(g->order() % u.order() == 0);
    CHECK(u.members[0] == 0);
    CHECK(is_normal(u));
  }
  CHECK(subs.front().order() == 1);
  CHECK(subs.back().order() == 4);
}

TEST_CASE("subgroup list is closed under intersection") {
  auto g = klein_three();
  auto subs = subgroups(g);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      std::vector<int> meet;
      for (int x : a.members)
        if (b.contains(x)) meet.push_back(x);
      bool found = false;
      for (const auto& c : subs)
        if (c.members == meet) found = true;
      CHECK(found);
    }
}

TEST_CASE("direct product of commuting groups multiplies orders") {
  auto pi = klein_three();
  auto minus = generate(3, {{"g", -IntMatrix::identity(3)}});
  auto w = direct_product_action(pi, minus);
  CHECK(w->order() == 8);
  CHECK(w->is_abelian());
  CHECK(w->decomposition_note ==
        "product of commuting factors of orders 4 and 2");
  auto subs = subgroups(w);
  CHECK(subs.size() == 16);  // elementary abelian of rank 3
}

TEST_CASE("direct product rejects non-commuting factors") {
  IntMatrix s{{0, 1}, {1, 0}};
  IntMatrix t{{1, 1}, {0, -1}};
  auto a = generate(2, {{"s", s}});
  auto b = generate(2, {{"t", t}});
  CHECK_THROWS_AS(direct_product_action(a, b), NotCommuting);
}

TEST_CASE("abelian invariants of small groups") {
  auto pi = klein_three();
  auto inv = abelian_invariants(pi);
  REQUIRE(inv.invariant_factors.size() == 2);
  CHECK(inv.invariant_factors[0] == 2);
  CHECK(inv.invariant_factors[1] == 2);

  IntMatrix rot{{0, -1}, {1, 1}};
  auto c6 = generate(2, {{"r", rot}});
  CHECK(abelian_invariants(c6).to_string() == "(6)");
  CHECK(cyclic_generator(c6) >= 0);
  CHECK(cyclic_generator(pi) == -1);
}

TEST_CASE("subgroup generators and labels are deterministic") {
  auto g = klein_three();
  auto subs = subgroups(g);
  CHECK(subgroup_label(subs[0]) == "<e>");
  CHECK(subgroup_label(subs.back()) == "<rho,sigma>");
  for (const auto& u : subs)
    CHECK(generated_subgroup(g, subgroup_generators(u)).members == u.members);
}

TEST_CASE("conjugacy classes are singletons in abelian groups") {
  auto g = klein_three();
  auto subs = subgroups(g);
  auto reps = subgroup_conjugacy_representatives(g, subs);
  CHECK(reps.size() == subs.size());
}

TEST_CASE("conjugacy merges conjugate subgroups in a nonabelian group") {
  // Symmetric group on 3 letters as permutation matrices.
  IntMatrix s12{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  IntMatrix s123{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  auto s3 = generate(3, {{"t", s12}, {"c", s123}});
  REQUIRE(s3->order() == 6);
  CHECK(!s3->is_abelian());
  auto subs = subgroups(s3);
  REQUIRE(subs.size() == 6);  // 1, three C2, C3, S3
  auto reps = subgroup_conjugacy_representatives(s3, subs);
  CHECK(reps.size() == 4);  // the three C2 collapse
  CHECK_THROWS_AS(abelian_invariants(s3), NotAbelian);
}
