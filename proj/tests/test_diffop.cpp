#include "doctest.h"

#include "jetop/diff_operator.hpp"
#include "jetop/random.hpp"
#include "jetop/taylor.hpp"

using namespace jetop;

namespace {

VecQ qpoint(std::initializer_list<long> v) {
  VecQ x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (long c : v) x[i++] = Rational(c);
  return x;
}

const Polynomial<Rational> X = Polynomial<Rational>::variable(1, 0);

DiffOperator three_plus_x_d2() {
  DiffOperator op(1, 2);
  op.set_coefficient(MultiIndex{0}, Polynomial<Rational>::constant(1, 3));
  op.set_coefficient(MultiIndex{2}, X);
  return op;
}

}  // namespace

TEST_CASE("pointwise application") {
  SUBCASE("d(x^2) at 3 is 6") {
    const auto d = DiffOperator::monomial_derivative_op(1, MultiIndex{1});
    CHECK(apply(d, SmoothFn<Rational>(X * X), qpoint({3})) == Rational(6));
  }
  SUBCASE("(3 + x d^2) x^3 at 2 is 3*8 + 2*12 = 48") {
    CHECK(apply(three_plus_x_d2(), SmoothFn<Rational>(X * X * X), qpoint({2})) == Rational(48));
  }
  SUBCASE("the zero operator returns 0") {
    CHECK(apply(DiffOperator::zero(1), SmoothFn<Rational>(X * X), qpoint({5})) == Rational(0));
  }
}

TEST_CASE("effective order") {
  CHECK(effective_order(DiffOperator::multiplication(Polynomial<Rational>::constant(1, 5))) == 0);
  CHECK(effective_order(three_plus_x_d2()) == 2);
  SUBCASE("stored but identically zero coefficients do not count") {
    DiffOperator op(1, 3);
    op.set_coefficient(MultiIndex{3}, Polynomial<Rational>::zero(1));
    op.set_coefficient(MultiIndex{1}, X);
    CHECK(effective_order(op) == 1);
  }
  CHECK_FALSE(effective_order(DiffOperator::zero(2)).has_value());
}

TEST_CASE("coefficient class report") {
  SUBCASE("polynomial coefficients are unbounded") {
    const auto report = coefficient_class(three_plus_x_d2());
    CHECK(report.min_class.is_unbounded());
    CHECK_FALSE(report.any_advisory);
  }
  SUBCASE("|x| coefficient has class 0, x^2|x| class 2") {
    const auto abs_x = smoothness_witness(0, Rational(0));
    CHECK(coefficient_class(DiffOperator::multiplication(abs_x)).min_class ==
          Smoothness::finite(0));
    const auto w2 = smoothness_witness(2, Rational(0));
    CHECK(coefficient_class(DiffOperator::multiplication(w2)).min_class == Smoothness::finite(2));
  }
  SUBCASE("grid coefficients are advisory") {
    Eigen::MatrixXd pts(2, 1);
    pts << 0.0, 1.0;
    Eigen::VectorXd vals(2);
    vals << 1.0, 2.0;
    const auto report =
        coefficient_class(DiffOperator::multiplication(GridSamples(pts, vals, 3)));
    CHECK(report.any_advisory);
    CHECK(report.min_class == Smoothness::finite(3));
  }
}

TEST_CASE("operator equality") {
  const auto p = three_plus_x_d2();
  CHECK(operator_equal(p, p));
  SUBCASE("d vs 2d differ") {
    const auto d1 = DiffOperator::monomial_derivative_op(1, MultiIndex{1}, Rational(1));
    const auto d2 = DiffOperator::monomial_derivative_op(1, MultiIndex{1}, Rational(2));
    CHECK_FALSE(operator_equal(d1, d2));
  }
  SUBCASE("missing and identically-zero coefficients agree") {
    DiffOperator q(1, 2);
    q.set_coefficient(MultiIndex{0}, Polynomial<Rational>::constant(1, 3));
    q.set_coefficient(MultiIndex{2}, X);
    q.set_coefficient(MultiIndex{1}, Polynomial<Rational>::zero(1));
    CHECK(operator_equal(p, q));
  }
}

TEST_CASE("application is linear") {
  SplitMix64 rng(31);
  for (int n = 1; n <= 2; ++n) {
    const DiffOperator op = random_operator(rng, n, 3);
    for (int t = 0; t < 5; ++t) {
      const auto f = random_polynomial(rng, n, 4);
      const auto g = random_polynomial(rng, n, 4);
      const Rational c = random_rational(rng);
      VecQ x(n);
      for (int i = 0; i < n; ++i) x[i] = random_rational(rng, 2);
      CHECK(apply(op, SmoothFn<Rational>(f + g), x) ==
            apply(op, SmoothFn<Rational>(f), x) + apply(op, SmoothFn<Rational>(g), x));
      CHECK(apply(op, SmoothFn<Rational>(c * f), x) == c * apply(op, SmoothFn<Rational>(f), x));
    }
  }
}

TEST_CASE("application only sees the jet at the point") {
  SplitMix64 rng(32);
  const DiffOperator op = random_operator(rng, 2, 2);
  const int order = effective_order(op).value();
  const auto f = random_polynomial(rng, 2, 3);
  const VecQ a = qpoint({1, -1});
  // g = f + (terms vanishing to order `order` at a): same jet there
  auto x = Polynomial<Rational>::variable(2, 0);
  auto y = Polynomial<Rational>::variable(2, 1);
  auto shift_x = x - Polynomial<Rational>::constant(2, Rational(1));
  auto shift_y = y + Polynomial<Rational>::constant(2, Rational(1));
  Polynomial<Rational> extra = Polynomial<Rational>::constant(2, Rational(7));
  for (int k = 0; k <= order; ++k) extra = extra * shift_x;
  extra = extra * shift_y;
  const auto g = f + extra;
  CHECK(apply(op, SmoothFn<Rational>(f), a) == apply(op, SmoothFn<Rational>(g), a));
}

TEST_CASE("an order-0 operator acts as multiplication") {
  SplitMix64 rng(33);
  const auto a0 = random_polynomial(rng, 2, 3);
  const auto op = DiffOperator::multiplication(a0);
  for (int t = 0; t < 5; ++t) {
    const auto f = random_polynomial(rng, 2, 3);
    VecQ x = qpoint({0, 0});
    for (int i = 0; i < 2; ++i) x[i] = random_rational(rng, 2);
    CHECK(apply(op, SmoothFn<Rational>(f), x) == a0(x) * f(x));
  }
}

TEST_CASE("error paths") {
  SUBCASE("function class below the operator order") {
    const auto f = callable_fn(1, Smoothness::finite(1),
                               [](const Eigen::VectorXd& x) { return x[0]; });
    Eigen::VectorXd x(1);
    x << 0.0;
    CHECK_THROWS_AS(apply(three_plus_x_d2(), f, x), SmoothnessError);
  }
  SUBCASE("sampled coefficients have no exact value") {
    Eigen::MatrixXd pts(1, 1);
    pts << 0.0;
    const auto op = DiffOperator::multiplication(GridSamples(pts, Eigen::VectorXd::Ones(1)));
    CHECK_THROWS_AS(apply(op, SmoothFn<Rational>(X), qpoint({0})), InconclusiveError);
  }
  SUBCASE("off-grid lookups fail") {
    Eigen::MatrixXd pts(1, 1);
    pts << 0.0;
    const GridSamples g(pts, Eigen::VectorXd::Ones(1));
    Eigen::VectorXd x(1);
    x << 0.5;
    CHECK_THROWS_AS(g.value_at(x), DomainError);
  }
  SUBCASE("coefficient degree above the nominal order is rejected") {
    DiffOperator op(1, 1);
    CHECK_THROWS_AS(op.set_coefficient(MultiIndex{2}, X), ParameterError);
  }
  SUBCASE("piecewise coefficients only fit univariate operators") {
    DiffOperator op(2, 0);
    CHECK_THROWS_AS(op.set_coefficient(MultiIndex{0, 0}, smoothness_witness(1, Rational(0))),
                    DimensionError);
  }
}
