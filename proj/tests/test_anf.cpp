#include <doctest.h>

#include "fds/anf.hpp"
#include "fds/errors.hpp"
#include "fds/io.hpp"
#include "fds/sampling.hpp"
#include "oracles.hpp"

using namespace fds;

namespace {

Anf p(const char* text, int n = 3) { return parse_anf(text, n); }

State st(int x1, int x2, int x3) { return State(x1 | (x2 << 1) | (x3 << 2)); }

}  // namespace

TEST_CASE("eval") {
  CHECK(p("1").eval(st(0, 1, 0)));
  CHECK_FALSE(p("1 + x3 + x1*x2").eval(st(1, 1, 0)));
  CHECK(p("x1*x2*x3").eval(st(1, 1, 1)));
  CHECK_FALSE(p("x1*x2*x3").eval(st(1, 1, 0)));
  CHECK_FALSE(Anf::zero(3).eval(st(1, 1, 1)));
  CHECK_THROWS_AS(p("x1").eval(State{8}), DimensionError);
}

TEST_CASE("add and multiply reduce mod 2") {
  CHECK(p("x1 + x2") + p("x2 + x3") == p("x1 + x3"));
  CHECK(p("x1") * p("x1") == p("x1"));
  CHECK(p("1 + x1") * p("1 + x1") == p("1 + x1"));
  CHECK(p("x1 + x1") == Anf::zero(3));
  CHECK_THROWS_AS(p("x1", 2) + p("x1", 3), DimensionError);
  CHECK_THROWS_AS(p("x1", 2) * p("x1", 3), DimensionError);
}

TEST_CASE("support") {
  CHECK(p("1 + x3 + x1*x2").support() == std::vector<int>{1, 2, 3});
  CHECK(Anf::zero(3).support().empty());
  CHECK(Anf::one(3).support().empty());
  CHECK(p("x2 + x1*x3 + x2*x3").support() == std::vector<int>{1, 2, 3});
  CHECK(p("x2*x3 + x3").support() == std::vector<int>{2, 3});
}

TEST_CASE("truth table conversions") {
  TruthTable conj(2);
  conj.set(3, true);
  CHECK(tt_to_anf(conj) == p("x1*x2", 2));

  TruthTable neg(1);
  neg.set(0, true);
  CHECK(tt_to_anf(neg) == p("1 + x1", 1));

  SUBCASE("exhaustive roundtrip n <= 3, and tables agree with pointwise evaluation") {
    for (int n = 1; n <= 3; ++n) {
      const std::uint32_t states = 1u << n;
      for (std::uint32_t bits = 0; bits < (1u << states); ++bits) {
        TruthTable t(n);
        for (State s = 0; s < states; ++s) t.set(s, (bits >> s) & 1u);
        const Anf a = tt_to_anf(t);
        REQUIRE(anf_to_tt(a) == t);
        for (State s = 0; s < states; ++s) REQUIRE(oracle::eval_by_product(a, s) == t.get(s));
      }
    }
  }

  SUBCASE("multiword tables") {
    Rng rng(7);
    for (int n : {6, 7, 9}) {
      const Anf a = random_anf(n, (1u << n) - 1, rng);
      const TruthTable t = anf_to_tt(a);
      for (State s = 0; s < (1u << n); ++s) REQUIRE(t.get(s) == oracle::eval_by_product(a, s));
      CHECK(tt_to_anf(t) == a);
    }
  }
}

TEST_CASE("graded basis and coefficient rows") {
  const auto basis = graded_basis(3);
  const std::vector<std::uint32_t> expected = {0b000, 0b001, 0b010, 0b100,
                                               0b011, 0b101, 0b110, 0b111};
  REQUIRE(basis.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) CHECK(basis[i].mask() == expected[i]);

  using Row = std::vector<std::uint8_t>;
  CHECK(coefficient_row(p("1 + x3 + x1*x2")) == Row{1, 0, 0, 1, 1, 0, 0, 0});
  CHECK(coefficient_row(p("x2 + x1*x3 + x2*x3")) == Row{0, 0, 1, 0, 0, 1, 1, 0});
  CHECK(coefficient_row(p("1 + x1*x2*x3")) == Row{1, 0, 0, 0, 0, 0, 0, 1});

  // n = 4 degree-2 block: x1x2, x1x3, x1x4, x2x3, x2x4, x3x4.
  const auto b4 = graded_basis(4);
  const std::vector<std::uint32_t> deg2 = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  for (std::size_t i = 0; i < deg2.size(); ++i) CHECK(b4[5 + i].mask() == deg2[i]);
}

TEST_CASE("coefficient_row is a linear bijection") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Anf a = random_anf(4, 0xF, rng), b = random_anf(4, 0xF, rng);
    const auto ra = coefficient_row(a), rb = coefficient_row(b);
    auto sum = coefficient_row(a + b);
    for (std::size_t i = 0; i < sum.size(); ++i) REQUIRE(sum[i] == (ra[i] ^ rb[i]));
    CHECK(from_coefficient_row(4, ra) == a);
  }
}

TEST_CASE("arithmetic is pointwise XOR and AND") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Anf a = random_anf(4, 0xF, rng), b = random_anf(4, 0xF, rng);
    const Anf sum = a + b, prod = a * b;
    for (State s = 0; s < 16; ++s) {
      REQUIRE(sum.eval(s) == (a.eval(s) != b.eval(s)));
      REQUIRE(prod.eval(s) == (a.eval(s) && b.eval(s)));
    }
  }
}

TEST_CASE("variables outside the support never matter") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t support = static_cast<std::uint32_t>(rng() & 0xF);
    const Anf a = random_anf(4, support, rng);
    CHECK((a.support_mask() & ~support) == 0);
    for (State s = 0; s < 16; ++s)
      for (int k = 1; k <= 4; ++k)
        if (!((a.support_mask() >> (k - 1)) & 1u))
          REQUIRE(a.eval(s) == a.eval(s ^ (State{1} << (k - 1))));
  }
}

TEST_CASE("construction bounds") {
  CHECK_THROWS_AS(Anf(0), DimensionError);
  CHECK_THROWS_AS(Anf(kHardMaxVars + 1), DimensionError);
  CHECK_THROWS_AS(Anf(2, {Monomial{0b100}}), DimensionError);
  CHECK_THROWS_AS(Anf::var(3, 4), DimensionError);
  CHECK(p("x2").is_linear());
  CHECK_FALSE(p("1 + x2").is_linear());
  CHECK(p("1 + x1*x2*x3").degree() == 3);
}
