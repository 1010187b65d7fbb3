#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lctcert/monomial.hpp"
#include "lctcert/lattice.hpp"
#include "test_support.hpp"

#include <random>
#include <sstream>

using namespace lctcert;

TEST_CASE("construction keeps only the minimal generating set") {
  const MonomialIdeal ideal(2, {{1, 1}, {2, 2}, {1, 3}, {1, 1}});
  REQUIRE(ideal.generators().size() == 1);
  CHECK(ideal.generators()[0] == ExponentVector{1, 1});
  CHECK_THROWS_AS(MonomialIdeal(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialIdeal(2, {{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("diagonal entry time reference values") {
  for (int n = 1; n <= 6; ++n)
    CHECK(diagonal_entry_time(maximal_ideal_power(n, 1)) == BigRational(1, n));
  CHECK(diagonal_entry_time(MonomialIdeal(2, {{2, 0}, {0, 3}})) == BigRational(6, 5));
  for (unsigned k = 1; k <= 6; ++k)
    CHECK(diagonal_entry_time(maximal_ideal_power(2, k)) == BigRational(k, 2));
}

TEST_CASE("lct of maximal-ideal powers is n/k") {
  for (int n = 1; n <= 8; ++n)
    for (unsigned k = 1; k <= 8; ++k)
      CHECK(lct_monomial(maximal_ideal_power(n, k)) == BigRational(n, k));
}

TEST_CASE("lct of plane two-generator ideals is 1/a + 1/b") {
  for (unsigned a = 1; a <= 10; ++a)
    for (unsigned b = 1; b <= 10; ++b)
      CHECK(lct_monomial(MonomialIdeal(2, {{a, 0}, {0, b}})) ==
            BigRational(1, a) + BigRational(1, b));
}

TEST_CASE("asymmetric 3D ideal: the diagonal enters at the mixed generator") {
  // (1,1,1) alone reaches the diagonal at t = 1; any mixing with a pure
  // power pushes some coordinate above 1
  const MonomialIdeal ideal(3, {{3, 0, 0}, {0, 4, 0}, {0, 0, 5}, {1, 1, 1}});
  CHECK(diagonal_entry_time(ideal) == 1);
  CHECK(lct_monomial(ideal) == 1);
  const SupportingNormal sn = supporting_normal(ideal);
  CHECK(sn.a[0] >= BigRational(1, 3));
  CHECK(sn.a[1] >= BigRational(1, 4));
  CHECK(sn.a[2] >= BigRational(1, 5));
  CHECK(sn.a[0] + sn.a[1] + sn.a[2] == 1);
}

TEST_CASE("supporting normal reference values and certification") {
  const SupportingNormal two_gen = supporting_normal(MonomialIdeal(2, {{2, 0}, {0, 3}}));
  CHECK(two_gen.a == std::vector<BigRational>{BigRational(1, 2), BigRational(1, 3)});
  CHECK(two_gen.mu == BigRational(6, 5));
  CHECK(two_gen.slack == 0);

  const SupportingNormal max2 = supporting_normal(maximal_ideal_power(2, 1));
  CHECK(max2.a == std::vector<BigRational>{BigRational(1), BigRational(1)});

  for (unsigned k = 1; k <= 5; ++k) {
    const SupportingNormal sk = supporting_normal(maximal_ideal_power(2, k));
    CHECK(sk.a == std::vector<BigRational>{BigRational(1, k), BigRational(1, k)});
  }
}

TEST_CASE("degenerate normals are rejected and perturbable") {
  const MonomialIdeal principal(2, {{1, 0}});
  CHECK(diagonal_entry_time(principal) == 1);
  CHECK_THROWS_AS(supporting_normal(principal), DegenerateNormalError);
  const SupportingNormal p = perturbed_supporting_normal(principal, BigRational(1, 10));
  CHECK(p.slack == BigRational(1, 10));
  for (const auto& ai : p.a) CHECK(ai > 0);
  BigRational diag = 0;
  for (const auto& ai : p.a) diag += ai * p.mu;
  CHECK(diag == 1);
  for (const auto& g : principal.generators()) {
    BigRational dot = 0;
    for (std::size_t i = 0; i < p.a.size(); ++i) dot += p.a[i] * BigRational(g[i]);
    CHECK(dot >= 1 - p.slack);
  }
  CHECK_THROWS_AS(perturbed_supporting_normal(principal, BigRational(2)), std::invalid_argument);
}

TEST_CASE("unit ideal edge cases") {
  const MonomialIdeal unit(2, {{0, 0}, {1, 2}});
  CHECK(unit.is_unit());
  CHECK(diagonal_entry_time(unit) == 0);
  CHECK_THROWS_AS(lct_monomial(unit), std::domain_error);
  CHECK(colength(unit) == BigInt(0));
}

TEST_CASE("colength reference values") {
  CHECK(colength(maximal_ideal_power(2, 2)) == BigInt(3));
  CHECK(colength(MonomialIdeal(2, {{2, 0}, {0, 3}})) == BigInt(6));
  for (unsigned m = 1; m <= 5; ++m)
    CHECK(colength(maximal_ideal_power(2, 2 * m)) == BigInt(m) * (2 * m + 1));
  CHECK(colength(MonomialIdeal(2, {{1, 0}})) == std::nullopt);
  CHECK(colength(MonomialIdeal(3, {{1, 1, 0}, {0, 0, 2}})) == std::nullopt);
  CHECK(colength(maximal_ideal_power(3, 2)) == BigInt(4));  // 1, x, y, z
}

TEST_CASE("staircase inequality: colength dominates the simplex count (exhaustive 2D)") {
  const auto staircases = testing::all_staircases_2d();
  CHECK(staircases.size() == 923);  // all nonzero height profiles in the 6x6 box
  for (const auto& sc : staircases) {
    const auto len = colength(sc.ideal);
    REQUIRE(len.has_value());
    CHECK(*len == sc.colength);  // independent height-sum oracle
    const SupportingNormal sn = supporting_normal(sc.ideal);
    const BigInt count = count_simplex(SimplexSpec(sn.a, /*strict=*/true));
    CHECK(*len >= count);
  }
}

TEST_CASE("staircase inequality: sampled family in dimension 3") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<unsigned> pure(1, 6), coord(0, 6);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<ExponentVector> gens = {{pure(rng), 0, 0}, {0, pure(rng), 0}, {0, 0, pure(rng)}};
    const int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) gens.push_back({coord(rng), coord(rng), coord(rng)});
    const MonomialIdeal ideal(3, gens);
    if (ideal.is_unit()) continue;
    const auto len = colength(ideal);
    REQUIRE(len.has_value());
    const SupportingNormal sn = supporting_normal(ideal);
    CHECK(*len >= count_simplex(SimplexSpec(sn.a, /*strict=*/true)));
  }
}

TEST_CASE("monotonicity under enlargement") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<unsigned> pure(1, 5), coord(0, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<ExponentVector> gens;
    for (int i = 0; i < n; ++i) {
      ExponentVector g(static_cast<std::size_t>(n), 0);
      g[static_cast<std::size_t>(i)] = pure(rng);
      gens.push_back(g);
    }
    const MonomialIdeal ideal(n, gens);
    ExponentVector extra(static_cast<std::size_t>(n));
    for (auto& e : extra) e = coord(rng);
    const MonomialIdeal larger = ideal.with_generator(extra);
    if (larger.is_unit()) continue;
    CHECK(lct_monomial(larger) >= lct_monomial(ideal));
    const auto l1 = colength(ideal), l2 = colength(larger);
    REQUIRE(l1.has_value());
    REQUIRE(l2.has_value());
    CHECK(*l2 <= *l1);
  }
}

TEST_CASE("ideal text format") {
  std::istringstream in("# comment line\n2 0\n\n0 3\n");
  const MonomialIdeal ideal = parse_monomial_ideal(in);
  CHECK(ideal.dimension() == 2);
  CHECK(ideal.generators().size() == 2);
  CHECK(lct_monomial(ideal) == BigRational(5, 6));

  std::istringstream bad("1 2\n3\n");
  CHECK_THROWS_AS(parse_monomial_ideal(bad), std::invalid_argument);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_monomial_ideal(empty), std::invalid_argument);
  std::istringstream negative("1 -2\n");
  CHECK_THROWS_AS(parse_monomial_ideal(negative), std::invalid_argument);
}
