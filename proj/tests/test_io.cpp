#include <doctest.h>

#include <sstream>

#include "glat/cohomology.hpp"
#include "glat/errors.hpp"
#include "glat/gallery.hpp"
#include "glat/latfile.hpp"

using namespace glat;

namespace {

GLattice round_trip(const GLattice& n) {
  std::istringstream in(lattice_to_string(n));
  return read_lattice(in);
}

void check_same(const GLattice& a, const GLattice& b) {
  CHECK(a.name == b.name);
  CHECK(a.rank == b.rank);
  CHECK(a.basis_labels == b.basis_labels);
  CHECK(a.group->order() == b.group->order());
  CHECK(a.group->generator_names == b.group->generator_names);
  REQUIRE(a.action.size() == b.action.size());
  for (size_t i = 0; i < a.action.size(); ++i) CHECK(a.action[i] == b.action[i]);
}

GLattice parse(const std::string& text) {
  std::istringstream in(text);
  return read_lattice(in);
}

}  // namespace

TEST_CASE("gallery lattices survive a file round trip") {
  for (const GLattice& n :
       {torus_pi_lattice(), torus_w_lattice(), trepalin_lattice(1),
        trepalin_lattice(2)}) {
    GLattice back = round_trip(n);
    check_same(n, back);
    CHECK(lattice_to_string(back) == lattice_to_string(n));
  }
}

TEST_CASE("profiles agree after a round trip") {
  GLattice n = trepalin_lattice(1);
  GLattice back = round_trip(n);
  CohomologyProfile p = h1_profile(n), q = h1_profile(back);
  REQUIRE(p.entries.size() == q.entries.size());
  for (size_t i = 0; i < p.entries.size(); ++i)
    CHECK(p.entries[i].to_string() == q.entries[i].to_string());
}

TEST_CASE("entries beyond 64 bits are written as strings and read back") {
  IntMatrix s{{0, 1}, {1, 0}};
  auto g = generate(2, {{"s", s}});
  mpz_class big("1208925819614629174706176");  // 2^80
  IntMatrix a{{1, 0}, {0, -1}};
  a.at(0, 1) = 2 * big;  // conjugate of diag(1,-1), still order 2
  GLattice n = make_lattice(g, {{"s", a}}, {}, "big");
  std::string text = lattice_to_string(n);
  CHECK(text.find("\"2417851639229258349412352\"") != std::string::npos);
  check_same(n, round_trip(n));
}

TEST_CASE("read_lattice rejects malformed input") {
  CHECK_THROWS_AS(parse("not json"), ParseError);
  CHECK_THROWS_AS(parse("[1,2]"), ParseError);

  const std::string base =
      "{\"name\":\"t\",\"rank\":2,"
      "\"group\":{\"generators\":[{\"name\":\"s\",\"matrix\":[[0,1],[1,0]]}]},"
      "\"action\":{\"generators\":[{\"name\":\"s\",\"matrix\":[[0,1],[1,0]]}]}}";
  CHECK_NOTHROW(parse(base));

  auto broken = [&](const std::string& from, const std::string& to) {
    std::string t = base;
    auto pos = t.find(from);
    REQUIRE(pos != std::string::npos);
    t.replace(pos, from.size(), to);
    return t;
  };

  // missing field
  CHECK_THROWS_AS(parse(broken("\"rank\":2,", "")), ParseError);
  // unknown field
  CHECK_THROWS_AS(parse(broken("\"rank\":2,", "\"rank\":2,\"color\":1,")),
                  ParseError);
  // generator name mismatch between group and action
  std::string t = base;
  t.replace(t.rfind("\"name\":\"s\""), 10, "\"name\":\"u\"");
  CHECK_THROWS_AS(parse(t), ParseError);
  // rank disagrees with the action matrices
  CHECK_THROWS_AS(parse(broken("\"rank\":2", "\"rank\":3")), ParseError);
  // float entry
  CHECK_THROWS_AS(parse(broken("[0,1]", "[0.5,1]")), ParseError);
  // oversized plain integer parses as a double and is rejected
  CHECK_THROWS_AS(parse(broken("[0,1]", "[99999999999999999999,1]")),
                  ParseError);
  // ragged matrix
  CHECK_THROWS_AS(parse(broken("[0,1]", "[0,1,1]")), ParseError);
  // basis_labels of the wrong length
  CHECK_THROWS_AS(
      parse(broken("\"action\"", "\"basis_labels\":[\"x\"],\"action\"")),
      ParseError);
}

TEST_CASE("read_lattice_file handles missing paths and element caps") {
  CHECK_THROWS_AS(read_lattice_file("/nonexistent/lat.json"), InputError);
  std::istringstream in(lattice_to_string(torus_w_lattice()));
  CHECK_THROWS_AS(read_lattice(in, 3), NotFinite);
}
