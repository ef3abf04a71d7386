#include "doctest.h"

#include "jetop/diff_operator.hpp"
#include "jetop/piecewise_poly.hpp"
#include "jetop/random.hpp"

using namespace jetop;

namespace {

Polynomial<Rational> uni(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial<Rational>::univariate(c);
}

// x^2 |x| = {-x^3, x^3}
PiecewisePoly x2_abs_x() { return PiecewisePoly({Rational(0)}, {uni({0, 0, 0, -1}), uni({0, 0, 0, 1})}); }

PiecewisePoly abs_x() { return PiecewisePoly({Rational(0)}, {uni({0, -1}), uni({0, 1})}); }

}  // namespace

TEST_CASE("piecewise derivative") {
  SUBCASE("x^2|x| -> 3x|x|") {
    const auto d = x2_abs_x().derivative();
    CHECK(d.pieces()[0] == uni({0, 0, -3}));
    CHECK(d.pieces()[1] == uni({0, 0, 3}));
  }
  SUBCASE("constants die") {
    const PiecewisePoly c({}, {uni({5})});
    CHECK(c.derivative().is_zero());
  }
  SUBCASE("|x| -> sign") {
    const auto d = abs_x().derivative();
    CHECK(d.pieces()[0] == uni({-1}));
    CHECK(d.pieces()[1] == uni({1}));
  }
}

TEST_CASE("smoothness class at a breakpoint") {
  CHECK(smoothness_class_at(x2_abs_x(), Rational(0)) == Smoothness::finite(2));
  CHECK(smoothness_class_at(abs_x(), Rational(0)) == Smoothness::finite(0));
  SUBCASE("interior points are smooth") {
    const auto f = PiecewisePoly::from_polynomial(uni({0, 0, 0, 1}));
    CHECK(smoothness_class_at(f, Rational(0)).is_unbounded());
  }
  SUBCASE("matching pieces are smooth even across a declared breakpoint") {
    const PiecewisePoly f({Rational(1)}, {uni({2, 3}), uni({2, 3})});
    CHECK(smoothness_class_at(f, Rational(1)).is_unbounded());
  }
  SUBCASE("a jump is C^-1") {
    const PiecewisePoly f({Rational(0)}, {uni({-1}), uni({1})});
    CHECK(smoothness_class_at(f, Rational(0)) == Smoothness::finite(-1));
  }
}

TEST_CASE("witness functions have exactly the requested class") {
  CHECK(smoothness_witness(0, Rational(0)) == abs_x());
  CHECK(smoothness_witness(2, Rational(0)) == x2_abs_x());
  CHECK(smoothness_class_at(smoothness_witness(1, Rational(1)), Rational(1)) ==
        Smoothness::finite(1));
  for (int m = 0; m <= 8; ++m) {
    for (const Rational& x0 : {Rational(0), Rational(1), Rational(-1, 2)}) {
      CHECK(smoothness_class_at(smoothness_witness(m, x0), x0) == Smoothness::finite(m));
    }
  }
}

TEST_CASE("derivative drops the class by exactly one") {
  for (int m = 1; m <= 6; ++m) {
    const auto w = smoothness_witness(m, Rational(1, 3));
    CHECK(smoothness_class_at(w.derivative(), Rational(1, 3)) == Smoothness::finite(m - 1));
  }
}

TEST_CASE("applying operators to piecewise functions") {
  SUBCASE("derivative operator on x^2|x|") {
    const auto out = pw_apply_operator(DiffOperator::monomial_derivative_op(1, MultiIndex{1}),
                                       x2_abs_x());
    CHECK(out.pieces()[0] == uni({0, 0, -3}));
    CHECK(out.pieces()[1] == uni({0, 0, 3}));
  }
  SUBCASE("multiplication by x on |x| gives x|x| of class 1") {
    const auto out =
        pw_apply_operator(DiffOperator::multiplication(Polynomial<Rational>::variable(1, 0)),
                          abs_x());
    CHECK(smoothness_class_at(out, Rational(0)) == Smoothness::finite(1));
    CHECK(out.pieces()[0] == uni({0, 0, -1}));
    CHECK(out.pieces()[1] == uni({0, 0, 1}));
  }
  SUBCASE("second derivative of |x| is undefined at the kink") {
    CHECK_THROWS_AS(
        pw_apply_operator(DiffOperator::monomial_derivative_op(1, MultiIndex{2}), abs_x()),
        UndefinedDerivativeError);
  }
  SUBCASE("the zero operator maps everything to zero") {
    SplitMix64 rng(3);
    for (int t = 0; t < 5; ++t) {
      const PiecewisePoly f({Rational(0)},
                            {random_polynomial(rng, 1, 3), random_polynomial(rng, 1, 3)});
      CHECK(pw_apply_operator(DiffOperator::zero(1), f).is_zero());
    }
  }
}

TEST_CASE("polynomial multiplication never lowers the class") {
  SplitMix64 rng(9);
  for (int m = 0; m <= 4; ++m) {
    const auto w = smoothness_witness(m, Rational(0));
    for (int t = 0; t < 6; ++t) {
      const auto p = random_polynomial(rng, 1, 3);
      const auto prod = pw_apply_operator(DiffOperator::multiplication(p), w);
      const Smoothness cls = smoothness_class_at(prod, Rational(0));
      CHECK(cls.at_least(m));
    }
  }
}

TEST_CASE("merged arithmetic keeps values consistent") {
  SplitMix64 rng(21);
  const PiecewisePoly a({Rational(-1), Rational(1)},
                        {random_polynomial(rng, 1, 2), random_polynomial(rng, 1, 2),
                         random_polynomial(rng, 1, 2)});
  const PiecewisePoly b({Rational(0)},
                        {random_polynomial(rng, 1, 2), random_polynomial(rng, 1, 2)});
  const auto sum = a + b;
  const auto prod = a * b;
  for (const Rational& x :
       {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1),
        Rational(3)}) {
    CHECK(sum(x) == a(x) + b(x));
    CHECK(prod(x) == a(x) * b(x));
  }
}

TEST_CASE("construction validates shape") {
  CHECK_THROWS_AS(PiecewisePoly({Rational(0)}, {uni({1})}), ParameterError);
  CHECK_THROWS_AS(PiecewisePoly({Rational(1), Rational(0)}, {uni({1}), uni({1}), uni({1})}),
                  ParameterError);
}
