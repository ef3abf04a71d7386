#include "doctest.h"

#include "jetop/multi_index.hpp"

using namespace jetop;

TEST_CASE("degree sums the exponents") {
  CHECK(degree(MultiIndex{0, 0}) == 0);
  CHECK(degree(MultiIndex{2, 1}) == 3);
  CHECK(degree(MultiIndex{0, 0, 5}) == 5);
}

TEST_CASE("factorial is the product of componentwise factorials") {
  CHECK(factorial(MultiIndex{0, 0}) == 1);
  CHECK(factorial(MultiIndex{2, 1}) == 2);
  CHECK(factorial(MultiIndex{3, 2}) == 12);
}

TEST_CASE("componentwise order") {
  CHECK(leq(MultiIndex{1, 0}, MultiIndex{2, 1}));
  CHECK_FALSE(leq(MultiIndex{0, 2}, MultiIndex{2, 1}));
  CHECK(leq(MultiIndex{1, 1}, MultiIndex{1, 1}));
  CHECK_THROWS_AS(leq(MultiIndex{1}, MultiIndex{1, 1}), DimensionError);
}

TEST_CASE("monomial differentiation") {
  SUBCASE("d_x x^2 = 2x") {
    const auto d = monomial_derivative(MultiIndex{2, 0}, MultiIndex{1, 0});
    CHECK(d.coefficient == 2);
    CHECK(d.exponent == MultiIndex{1, 0});
  }
  SUBCASE("full derivative yields the factorial") {
    const auto d = monomial_derivative(MultiIndex{2, 1}, MultiIndex{2, 1});
    CHECK(d.coefficient == 2);
    CHECK(d.exponent == MultiIndex{0, 0});
  }
  SUBCASE("excess differentiation kills the monomial") {
    const auto d = monomial_derivative(MultiIndex{1, 0}, MultiIndex{0, 1});
    CHECK(d.coefficient == 0);
  }
  CHECK_THROWS_AS(monomial_derivative(MultiIndex{1}, MultiIndex{1, 0}), DimensionError);
}

TEST_CASE("enumeration is graded lexicographic") {
  SUBCASE("univariate") {
    const auto idx = multi_indices_up_to(1, 2);
    REQUIRE(idx.size() == 3);
    CHECK(idx[0] == MultiIndex{0});
    CHECK(idx[1] == MultiIndex{1});
    CHECK(idx[2] == MultiIndex{2});
  }
  SUBCASE("counts match the binomial formula") {
    CHECK(multi_indices_up_to(2, 2).size() == 6);
    CHECK(multi_indices_up_to(3, 0).size() == 1);
    CHECK(multi_indices_up_to(3, 0)[0] == MultiIndex{0, 0, 0});
    for (int n = 1; n <= 4; ++n)
      for (int m = 0; m <= 5; ++m)
        CHECK(static_cast<long>(multi_indices_up_to(n, m).size()) == basis_size(n, m));
  }
  SUBCASE("degree blocks ascend, lexicographic within, no duplicates") {
    for (int n = 1; n <= 4; ++n) {
      const auto idx = multi_indices_up_to(n, 4);
      for (std::size_t i = 1; i < idx.size(); ++i) {
        CHECK(degree(idx[i - 1]) <= degree(idx[i]));
        CHECK(idx[i - 1] < idx[i]);  // graded-lex strict
      }
    }
  }
}

TEST_CASE("full-order derivative equals the factorial, exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    const int cap = n <= 2 ? 6 : 4;
    for (const auto& alpha : multi_indices_up_to(n, cap)) {
      CHECK(monomial_derivative(alpha, alpha).coefficient == factorial(alpha));
    }
  }
}

TEST_CASE("derivative vanishes exactly when the order is not componentwise dominated") {
  for (int n = 1; n <= 3; ++n) {
    const auto idx = multi_indices_up_to(n, 4);
    for (const auto& alpha : idx)
      for (const auto& beta : idx)
        CHECK((monomial_derivative(alpha, beta).coefficient == 0) == !leq(beta, alpha));
  }
}

TEST_CASE("basis ranks invert the enumeration") {
  const MonomialBasis basis(3, 5);
  for (int r = 0; r < basis.size(); ++r) CHECK(basis.rank_of(basis[r]) == r);
  CHECK(basis.rank_of(MultiIndex{6, 0, 0}) == -1);
}

TEST_CASE("negative exponents are rejected") {
  Eigen::ArrayXi e(2);
  e << 1, -1;
  CHECK_THROWS_AS(MultiIndex{e}, ParameterError);
}
