#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "glat/errors.hpp"
#include "glat/gallery.hpp"
#include "glat/report.hpp"
#include "glat/resolutions.hpp"

using namespace glat;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l)) out.push_back(l);
  return out;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("show rendering lists the action generators") {
  GLattice t = torus_pi_lattice();
  std::string h = render_show(t, OutputFormat::Human);
  CHECK(contains(h, "name = torus_pi"));
  CHECK(contains(h, "group order = 4"));
  CHECK(contains(h, "action rho = [[0, 0, 1], [-1, -1, -1], [1, 0, 0]]"));

  std::string k = render_show(t, OutputFormat::Kv);
  auto ls = lines_of(k);
  CHECK(std::is_sorted(ls.begin(), ls.end()));
  CHECK(contains(k, "generator_orders=2,2\n"));
}

TEST_CASE("cohomology rendering carries the full-group summary line") {
  GLattice n = trepalin_lattice(1);
  std::string plain = render_cohomology(n, false, -1, false,
                                        OutputFormat::Human);
  CHECK(contains(plain, "H1(W) = (2,2)\n"));
  std::string all = render_cohomology(n, true, -1, true, OutputFormat::Human);
  CHECK(contains(all, "H1(W) = (2,2)\n"));
  CHECK(contains(all, "<sigma,g>"));
  CHECK(contains(all, "H1(N*)"));

  std::string kv = render_cohomology(n, true, -1, true, OutputFormat::Kv);
  auto ls = lines_of(kv);
  CHECK(std::is_sorted(ls.begin(), ls.end()));
  CHECK(contains(kv, "h1=(2,2)\n"));
  CHECK(contains(kv, "profile.U4.h1dual=(2,2)\n"));

  CHECK_THROWS_AS(render_cohomology(n, false, 99, false, OutputFormat::Human),
                  InputError);

  std::string one = render_cohomology(n, false, 4, true, OutputFormat::Human);
  CHECK(contains(one, "subgroup 4 = <sigma,g>"));
  CHECK(contains(one, "H1(U, N) = (2,2)"));
}

TEST_CASE("verdict rendering states what is and is not proven") {
  GLattice n1 = trepalin_lattice(1);
  ObstructionReport rep = stably_permutation_verdict(n1);
  std::string h = render_obstruction(n1, rep, OutputFormat::Human);
  CHECK(contains(h, "verdict = NotStablyPermutation"));
  CHECK(contains(h, "witness subgroup = <sigma,g>"));
  CHECK(contains(h, "obstruction = (2,2)"));
  CHECK(contains(h, "conclusive"));

  GLattice reg = permutation_lattice(
      n1.group, Subgroup{n1.group, {0}});
  ObstructionReport prep = stably_permutation_verdict(reg);
  std::string c = render_obstruction(reg, prep, OutputFormat::Human);
  CHECK(contains(c, "verdict = ConsistentWithStablyPermutation"));
  CHECK(contains(c, "not a proof"));
  CHECK(contains(c, "outcome = Proven"));

  std::string kv = render_obstruction(n1, rep, OutputFormat::Kv);
  auto ls = lines_of(kv);
  CHECK(std::is_sorted(ls.begin(), ls.end()));
  CHECK(contains(kv, "verdict.witness=<sigma,g>\n"));
}

TEST_CASE("similarity rendering reports the separating invariants") {
  GLattice a = trepalin_lattice(1), b = trepalin_lattice(2);
  SimilarityReport rep = similarity_verdict(a, b);
  std::string h = render_similarity(a, b, rep, OutputFormat::Human);
  CHECK(contains(h, "verdict = NotSimilar"));
  CHECK(contains(h, "H1(a) = (2,2)"));
  CHECK(contains(h, "H1(b) = (2,2,2,2)"));
}

TEST_CASE("renderings are deterministic") {
  GLattice n = trepalin_lattice(1);
  CHECK(render_cohomology(n, true, -1, true, OutputFormat::Kv) ==
        render_cohomology(trepalin_lattice(1), true, -1, true,
                          OutputFormat::Kv));
  std::string t1 = theorem_b_report(OutputFormat::Kv);
  CHECK(t1 == theorem_b_report(OutputFormat::Kv));
  CHECK(contains(t1, "torus_w.f.verdict=ConsistentWithStablyPermutation\n"));
  CHECK(contains(t1, "torus_w.f.search.outcome=Unknown\n"));
  CHECK(contains(t1, "n1.verdict=NotStablyPermutation\n"));
  CHECK(contains(t1, "not a proof"));
}
