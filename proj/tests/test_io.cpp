#include <doctest.h>

#include <cstdlib>

#include "fds/errors.hpp"
#include "fds/io.hpp"

using namespace fds;

namespace {
const std::string kData = FDS_DATA_DIR;
}

TEST_CASE("parse_anf") {
  CHECK(parse_anf("0", 3).is_zero());
  CHECK(parse_anf("1", 3) == Anf::one(3));
  CHECK(parse_anf(" x1 *x2 + 1 ", 2) == Anf::var(2, 1) * Anf::var(2, 2) + Anf::one(2));
  CHECK(parse_anf("x1 + x1", 2).is_zero());
  CHECK(parse_anf("x1*x1", 2) == Anf::var(2, 1));
  CHECK_THROWS_AS(parse_anf("", 2), ParseError);
  CHECK_THROWS_AS(parse_anf("x1 +", 2), ParseError);
  CHECK_THROWS_AS(parse_anf("y1", 2), ParseError);
  CHECK_THROWS_AS(parse_anf("x0", 2), ParseError);
  CHECK_THROWS_AS(parse_anf("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_anf("2", 2), ParseError);
}

TEST_CASE("format_anf uses graded order") {
  CHECK(format_anf(parse_anf("x1*x2 + x3 + 1", 3)) == "1 + x3 + x1*x2");
  CHECK(format_anf(parse_anf("x2*x3 + x1*x3 + x2", 3)) == "x2 + x1*x3 + x2*x3");
  CHECK(format_anf(Anf::zero(4)) == "0");
  for (const char* s : {"1 + x1*x2*x3", "x1 + x2 + x3", "x2*x3"})
    CHECK(format_anf(parse_anf(s, 3)) == s);
}

TEST_CASE("system files") {
  const System f = load_system(kData + "/coefficients.fds");
  CHECK(f.size() == 3);
  CHECK(f.update(3) == parse_anf("1 + x1*x2*x3", 3));
  CHECK(parse_system(format_system(f)) == f);

  const System g = parse_system("# comment\nvars: 2\n\nf2 = x1\n  # another\nf1 = 1\n");
  CHECK(g.update(1) == Anf::one(2));
  CHECK(g.update(2) == Anf::var(2, 1));

  CHECK_THROWS_AS(parse_system(""), ParseError);
  CHECK_THROWS_AS(parse_system("vars: 2\nf1 = x1\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: 2\nf1 = x1\nf1 = x2\nf2 = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: 2\nf1 = x3\nf2 = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: 2\nf3 = 1\nf1 = 0\nf2 = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: x\n"), ParseError);
  CHECK_THROWS_AS(load_system(kData + "/missing.fds"), IoError);

  Limits small;
  small.max_vars = 2;
  CHECK_THROWS_AS(load_system(kData + "/coefficients.fds", small), BudgetError);
}

TEST_CASE("graph files") {
  const DepGraph c4 = load_graph(kData + "/cycle4.graph");
  CHECK(c4.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(parse_graph(format_graph(c4)) == c4);
  CHECK(parse_graph("vertices: 3\nedges:\n") == DepGraph(3));
  CHECK(parse_graph("vertices: 2\nedges: ( 2 , 1 )\n").has_edge(1, 2));
  CHECK_THROWS_AS(parse_graph("vertices: 3\nedges: (1,1)\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: 3\nedges: (1,4)\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: 3\nedges: (1,2),\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertices: 3\nedges: (1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("edges: (1,2)\n"), ParseError);
  CHECK_THROWS_AS(load_graph(kData + "/missing.graph"), IoError);
}

TEST_CASE("words and permutations") {
  CHECK(parse_word("1,2,3") == Word({1, 2, 3}));
  CHECK(parse_word(" 3 , 1 ") == Word({3, 1}));
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_word("a"), ParseError);
  CHECK(parse_permutation("2,1,3") == Permutation({2, 1, 3}));
  CHECK_THROWS_AS(parse_permutation("1,1"), ParseError);
}

TEST_CASE("json views") {
  CHECK(to_json(DepGraph(3, std::vector<Edge>{{2, 3}})).dump() ==
        R"({"n":3,"edges":[[2,3]]})");
  CHECK(to_json(Word({3, 1})).dump() == "[3,1]");
  LimitCycles lc;
  lc.cycles = {{0}, {1, 5}};
  CHECK(to_json(lc, 3).dump() == R"({"multiset":[1,2],"cycles":[["000"],["100","101"]]})");
  CHECK(to_json(BigInt(7)).dump() == "7");
  CHECK(to_json(BigInt(1) << 70).dump() == "\"1180591620717411303424\"");
}

TEST_CASE("FDS_MAX_N") {
  ::setenv("FDS_MAX_N", "5", 1);
  CHECK(Limits::from_env().max_vars == 5);
  ::setenv("FDS_MAX_N", "29", 1);
  CHECK_THROWS_AS(Limits::from_env(), BudgetError);
  ::setenv("FDS_MAX_N", "abc", 1);
  CHECK_THROWS_AS(Limits::from_env(), ParseError);
  ::unsetenv("FDS_MAX_N");
  CHECK(Limits::from_env().max_vars == Limits{}.max_vars);
}
