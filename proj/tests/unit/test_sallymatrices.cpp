#include "doctest.h"
#include "sally/formulas.hpp"
#include "sally/sallymatrices.hpp"

using namespace sally;

TEST_CASE("symbol tables") {
  const auto t = SymbolTable::squares(7, {2});
  CHECK(t(0) == Monomial::variable(0));
  CHECK(t(7) == Monomial::variable(0, 2));
  CHECK(t(8) == Monomial::variable(0) * Monomial::variable(1));
  CHECK(t(9) == Monomial::variable(1, 2));
  CHECK_THROWS_AS(t(2), Error);
  CHECK_THROWS_AS(t(10), Error);

  const auto u = SymbolTable::for_34(7);
  CHECK(u(9) == Monomial::variable(0) * Monomial::variable(2));
  CHECK(u(10) == Monomial::variable(1) * Monomial::variable(2));
  CHECK(u(11) == Monomial::variable(2, 2));
  CHECK_THROWS_AS(u(3), Error);
}

TEST_CASE("minor counts") {
  CHECK(minors2(matrix_A(6, 3)).size() == 6);
  const auto b = matrix_B(6, 3);
  REQUIRE(b.special_column.has_value());
  CHECK(minors2(b, b.special_column).size() == 3);

  MonomialMatrix single;
  single.rows = {std::vector<Monomial>{Monomial::variable(0)}, std::vector<Monomial>{Monomial::variable(1)}};
  CHECK(minors2(single).empty());

  CHECK(claimed_generators(7, 2).size() == 15);
  CHECK(claimed_generators_23(7).size() == 9);
  CHECK(claimed_generators_34(7).size() == 10);
  CHECK(claimed_generators_23(8).size() == 14);
}

TEST_CASE("B_m carries its special column in every shape") {
  for (Integer e = 6; e <= 12; ++e) {
    for (Integer m = 1; m < e; ++m) {
      const auto b = matrix_B(e, m);
      REQUIRE(b.special_column.has_value());
      CHECK(b.symbols[0][*b.special_column] == m - 1);
      CHECK(b.symbols[1][*b.special_column] == m + 1);
    }
  }
}

TEST_CASE("matrices are homogeneous and claimed sets have the right size, e in [6, 12]") {
  for (Integer e = 6; e <= 12; ++e) {
    for (Integer m = 1; m < e; ++m) {
      CAPTURE(e);
      CAPTURE(m);
      CHECK(matrix_A(e, m).is_homogeneous(e));
      CHECK(matrix_B(e, m).is_homogeneous(e));
      const auto gens = claimed_generators(e, m);
      CHECK(static_cast<Integer>(gens.size()) == mu_m(e, m));
      for (const auto& g : gens) CHECK(g.is_homogeneous(e));
      if (m >= 2 && m <= e - 2) CHECK(matrix_A_mm1(e, m).is_homogeneous(e));
    }
    const auto [a23, b23] = matrix_pair_23(e);
    const auto [a34, b34] = matrix_pair_34(e);
    CHECK(a23.is_homogeneous(e));
    CHECK(b23.is_homogeneous(e));
    CHECK(a34.is_homogeneous(e));
    CHECK(b34.is_homogeneous(e));
    CHECK(matrix_A_prime_34(e).is_homogeneous(e));
    CHECK(static_cast<Integer>(claimed_generators_23(e).size()) == (e - 1) * (e - 4) / 2);
    CHECK(static_cast<Integer>(claimed_generators_34(e).size()) == binomial(e - 2, 2));
  }
}

TEST_CASE("printing") {
  CHECK(matrix_A(6, 3).to_string() == "A_3 = [[X_0, X_1, X_4, X_5]; [X_1, X_2, X_5, X_0^2]]");
}
