#include <doctest.h>

#include "fds/depgraph.hpp"
#include "fds/errors.hpp"
#include "fds/io.hpp"
#include "fds/sampling.hpp"
#include "oracles.hpp"

using namespace fds;

namespace {

DepGraph graph(int n, std::vector<Edge> edges) { return DepGraph(n, edges); }

System sys(std::initializer_list<const char*> updates) {
  std::vector<Anf> out;
  const int n = static_cast<int>(updates.size());
  for (const char* u : updates) out.push_back(parse_anf(u, n));
  return System(std::move(out));
}

}  // namespace

TEST_CASE("linear_system") {
  const System l = linear_system(linearize(graph(3, {{2, 3}})));
  CHECK(l.update(1) == parse_anf("x2 + x3", 3));
  CHECK(l.update(2) == parse_anf("x1", 3));
  CHECK(l.update(3) == parse_anf("x1", 3));
  for (int i = 1; i <= 3; ++i) CHECK(l.update(i).is_linear());
  const System z = linear_system(linearize(DepGraph::complete(3)));
  for (int i = 1; i <= 3; ++i) CHECK(z.update(i).is_zero());
}

TEST_CASE("phi of the linearization is the graph") {
  for (int n = 1; n <= 4; ++n)
    for (const DepGraph& g : oracle::all_graphs(n))
      REQUIRE(phi(linear_system(linearize(g))) == g);
  Rng rng(31);
  for (int n = 5; n <= 6; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const DepGraph g = random_graph(n, rng);
      REQUIRE(phi(linear_system(linearize(g))) == g);
    }
}

TEST_CASE("graph_equivalent") {
  const System f = sys({"x2 + x3", "1 + x2", "x1"});
  const System g = sys({"x2", "x3", "0"});
  const auto p = graph_equivalent(f, g);
  REQUIRE(p);
  CHECK(perm_act(*p, linearize(phi(f))) == linearize(phi(g)));

  const auto self = graph_equivalent(f, f);
  REQUIRE(self);
  CHECK(*self == Permutation::identity(3));

  const System tri = linear_system(linearize(DepGraph::complete(3)));
  const System empty = linear_system(linearize(DepGraph(3)));
  CHECK_FALSE(graph_equivalent(tri, empty));

  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const System a = random_system(4, rng);
    const System b = sample_psi(random_graph(4, rng), rng);
    CHECK(graph_equivalent(a, b).has_value() == find_graph_iso(phi(a), phi(b)).has_value());
  }
}

TEST_CASE("is_d_local") {
  Rng rng(33);
  const DepGraph path = graph(3, {{1, 2}, {2, 3}});
  const System any = random_system(3, rng);
  CHECK(is_d_local(any, path, 3));
  CHECK(is_d_local(any, DepGraph(3), 3));

  const System own = sys({"1 + x1", "x2", "0"});
  for (const DepGraph& y : oracle::all_graphs(3)) CHECK(is_d_local(own, y, 0));

  const System swap = sys({"x2", "x1", "x3"});
  CHECK(is_d_local(swap, path, 1));
  CHECK_FALSE(is_d_local(swap, DepGraph(3), 1));
  CHECK_FALSE(is_d_local(sys({"x3", "0", "0"}), path, 1));
  CHECK(is_d_local(sys({"x3", "0", "0"}), path, 2));
}

TEST_CASE("psi_cardinality") {
  CHECK(psi_cardinality(graph(3, {{2, 3}})).log2 == 16);
  CHECK(psi_cardinality(graph(3, {{2, 3}})).value() == BigInt(65536));
  for (int n = 1; n <= 10; ++n)
    CHECK(psi_cardinality(DepGraph::complete(n)).value() == pow(BigInt(4), n));
  // Empty graph on 5 vertices: every coordinate reads all 5, 2^32 each.
  CHECK(psi_cardinality(DepGraph(5)).log2 == 5 * 32);
}

TEST_CASE("psi_membership") {
  Rng rng(34);
  for (int n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const DepGraph g = random_graph(n, rng);
      CHECK(psi_membership(linear_system(linearize(g)), g));
      const System f = sample_psi(g, rng);
      CHECK(psi_membership(f, g));
    }
  CHECK_FALSE(psi_membership(sys({"x2", "0"}), DepGraph::complete(2)));
  CHECK(psi_membership(sys({"x2", "0"}), DepGraph(2)));
}

TEST_CASE("phi of psi members contains the graph") {
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const DepGraph g = random_graph(5, rng);
    for (int k = 0; k < 100; ++k) REQUIRE(phi(sample_psi(g, rng)).contains(g));
  }
}

TEST_CASE("phi_of_psi recovers the graph") {
  for (int n = 1; n <= 3; ++n)
    for (const DepGraph& g : oracle::all_graphs(n)) REQUIRE(phi_of_psi(g) == g);
  for (const DepGraph& g : oracle::all_graphs(4)) REQUIRE(phi_of_psi(g) == g);
  CHECK_THROWS_AS(phi_of_psi(DepGraph(5)), BudgetError);
}

TEST_CASE("sampling depends only on the seed") {
  for (int n = 1; n <= 6; ++n) {
    Rng a(77), b(77);
    const DepGraph g = random_graph(n, a);
    random_graph(n, b);
    CHECK(sample_psi(g, a) == sample_psi(g, b));
    CHECK(random_system(n, a) == random_system(n, b));
  }
  Rng r(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Anf p = random_anf(5, 0b10110, r);
    CHECK((p.support_mask() & ~0b10110u) == 0);
  }
}
