#include "doctest.h"

#include <cmath>

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

Eigen::VectorXd dpoint(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double c : v) x[i++] = c;
  return x;
}

const Polynomial<Rational> X = Polynomial<Rational>::variable(1, 0);

}  // namespace

TEST_CASE("jet sums") {
  const VecQ origin = qpoint({0});
  SUBCASE("x^2 + (-x^2) is the zero jet") {
    const auto a = (X * X).jet_at(origin, 2);
    const auto b = (Rational(-1) * (X * X)).jet_at(origin, 2);
    CHECK((a + b).is_zero());
  }
  SUBCASE("x + 1") {
    const auto s = X.jet_at(origin, 2) + Polynomial<Rational>::constant(1, 1).jet_at(origin, 2);
    CHECK(s.coeff(MultiIndex{0}) == Rational(1));
    CHECK(s.coeff(MultiIndex{1}) == Rational(1));
    CHECK(s.coeff(MultiIndex{2}) == Rational(0));
  }
  SUBCASE("exp minus its constant term starts 0, 1, 1/2") {
    const auto e = exp_fn().jet_at(dpoint({0.0}), 2);
    const auto c = Jet<double>::constant(dpoint({0.0}), 2, -1.0);
    const auto s = e + c;
    CHECK(s.coeff(MultiIndex{0}) == doctest::Approx(0.0));
    CHECK(s.coeff(MultiIndex{1}) == doctest::Approx(1.0));
    CHECK(s.coeff(MultiIndex{2}) == doctest::Approx(0.5));
  }
}

TEST_CASE("jet products truncate the Cauchy product") {
  const VecQ origin = qpoint({0});
  SUBCASE("x * x") {
    const auto j = X.jet_at(origin, 2) * X.jet_at(origin, 2);
    CHECK(j.coeff(MultiIndex{2}) == Rational(1));
    CHECK(j.coeff(MultiIndex{0}) == Rational(0));
    CHECK(j.coeff(MultiIndex{1}) == Rational(0));
  }
  SUBCASE("(1+x)(1-x)") {
    const auto one = Polynomial<Rational>::constant(1, 1);
    const auto j = (one + X).jet_at(origin, 2) * (one - X).jet_at(origin, 2);
    CHECK(j.coeff(MultiIndex{0}) == Rational(1));
    CHECK(j.coeff(MultiIndex{1}) == Rational(0));
    CHECK(j.coeff(MultiIndex{2}) == Rational(-1));
  }
  SUBCASE("exp squared is the series of exp(2x)") {
    const auto e = exp_fn().jet_at(dpoint({0.0}), 3);
    const auto sq = e * e;
    CHECK(sq.coeff(MultiIndex{0}) == doctest::Approx(1.0));
    CHECK(sq.coeff(MultiIndex{1}) == doctest::Approx(2.0));
    CHECK(sq.coeff(MultiIndex{2}) == doctest::Approx(2.0));
    CHECK(sq.coeff(MultiIndex{3}) == doctest::Approx(4.0 / 3.0));
  }
}

TEST_CASE("misaligned jets refuse to combine") {
  const auto a = X.jet_at(qpoint({0}), 2);
  const auto b = X.jet_at(qpoint({1}), 2);
  const auto c = X.jet_at(qpoint({0}), 3);
  CHECK_THROWS_AS(a + b, AlignmentError);
  CHECK_THROWS_AS(a * c, AlignmentError);
}

TEST_CASE("derivative extraction") {
  SUBCASE("(x^3)''' = 6") {
    CHECK(derivative_at(SmoothFn<Rational>(X * X * X), MultiIndex{3}, qpoint({0})) == Rational(6));
  }
  SUBCASE("d_x d_y x^2 y = 2x at (1,1)") {
    const auto x = Polynomial<Rational>::variable(2, 0);
    const auto y = Polynomial<Rational>::variable(2, 1);
    CHECK(derivative_at(SmoothFn<Rational>(x * x * y), MultiIndex{1, 1}, qpoint({1, 1})) ==
          Rational(2));
  }
  SUBCASE("exp'' (0) = 1") {
    CHECK(derivative_at(exp_fn(), MultiIndex{2}, dpoint({0.0})) == doctest::Approx(1.0));
  }
}

TEST_CASE("requesting derivatives beyond the declared class fails") {
  const auto f = callable_fn(1, Smoothness::finite(1),
                             [](const Eigen::VectorXd& x) { return x[0] * x[0]; });
  CHECK_NOTHROW(derivative_at(f, MultiIndex{1}, dpoint({0.5})));
  CHECK_THROWS_AS(derivative_at(f, MultiIndex{2}, dpoint({0.5})), SmoothnessError);
}

TEST_CASE("taylor polynomials") {
  SUBCASE("polynomials of degree <= k are fixed points") {
    const auto cube = X * X * X;
    CHECK(taylor_polynomial(SmoothFn<Rational>(cube), qpoint({0}), 3) == cube);
    CHECK(taylor_polynomial(SmoothFn<Rational>(cube), qpoint({2}), 3) == cube);
  }
  SUBCASE("exp at order 1 is 1 + x") {
    const auto q = taylor_polynomial(exp_fn(), dpoint({0.0}), 1);
    CHECK(q.coeff(MultiIndex{0}) == doctest::Approx(1.0));
    CHECK(q.coeff(MultiIndex{1}) == doctest::Approx(1.0));
  }
  SUBCASE("truncation preserves every derivative up to its order") {
    for (const auto& f : {exp_fn(), sin_fn()}) {
      const Eigen::VectorXd a = dpoint({0.3});
      const auto q = taylor_polynomial(f, a, 3);
      for (const auto& alpha : multi_indices_up_to(1, 3))
        CHECK(derivative_at(SmoothFn<double>(q), alpha, a) ==
              doctest::Approx(derivative_at(f, alpha, a)).epsilon(1e-12));
    }
  }
  SUBCASE("re-centered quadratic of x^2 y reproduces jets through order 2") {
    const auto x = Polynomial<Rational>::variable(2, 0);
    const auto y = Polynomial<Rational>::variable(2, 1);
    const SmoothFn<Rational> f(x * x * y);
    const VecQ a = qpoint({1, 1});
    const auto q = taylor_polynomial(f, a, 2);
    for (const auto& alpha : multi_indices_up_to(2, 2))
      CHECK(derivative_at(SmoothFn<Rational>(q), alpha, a) == derivative_at(f, alpha, a));
    // the cubic term u^2 v was dropped, so q is not f
    CHECK(q != x * x * y);
    CHECK(q.coeff(MultiIndex{2, 1}) == Rational(0));
  }
}

TEST_CASE("taylor remainder by quadrature") {
  SUBCASE("exp: integral_0^1 (1-t) e^t dt = e - 2") {
    const double r = taylor_remainder_quadrature(exp_fn(), dpoint({0.0}), MultiIndex{2},
                                                 dpoint({1.0}));
    CHECK(std::abs(r - (std::exp(1.0) - 2.0)) < 1e-10);
  }
  SUBCASE("polynomials of degree <= k have zero order-(k+1) remainder") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = random_polynomial(rng, 1, 2).cast<double>();
      const double r = taylor_remainder_quadrature(SmoothFn<double>(p), dpoint({0.0}),
                                                   MultiIndex{3}, dpoint({0.7}));
      CHECK(std::abs(r) < 1e-12);
    }
  }
  SUBCASE("x^3 about 0: remainder closes the order-1 expansion at x=1") {
    const auto cube = (X * X * X).cast<double>();
    const double r = taylor_remainder_quadrature(SmoothFn<double>(cube), dpoint({0.0}),
                                                 MultiIndex{2}, dpoint({1.0}));
    CHECK(r == doctest::Approx(1.0));  // integral_0^1 (1-t) 6t dt
    const auto q1 = taylor_polynomial(SmoothFn<double>(cube), dpoint({0.0}), 1);
    CHECK(q1(dpoint({1.0})) + r * 1.0 == doctest::Approx(1.0));  // f(1)
  }
  CHECK_THROWS_AS(
      taylor_remainder_quadrature(exp_fn(), dpoint({0.0}), MultiIndex{0}, dpoint({1.0})),
      ParameterError);
}

TEST_CASE("flatness predicate") {
  const SmoothFn<Rational> cube(X * X * X);
  CHECK(vanishes_to_order(cube, qpoint({0}), 2));
  CHECK_FALSE(vanishes_to_order(cube, qpoint({0}), 3));
  const auto x = Polynomial<Rational>::variable(2, 0);
  const auto y = Polynomial<Rational>::variable(2, 1);
  CHECK(vanishes_to_order(SmoothFn<Rational>(x * x * y * y), qpoint({0, 0}), 3));
}

TEST_CASE("truncated products agree with exact polynomial products") {
  SplitMix64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto p = random_polynomial(rng, n, 4, 4);
      const auto q = random_polynomial(rng, n, 4, 4);
      VecQ a(n);
      for (int i = 0; i < n; ++i) a[i] = random_rational(rng, 2);
      const int order = 8;
      const auto lhs = p.jet_at(a, order) * q.jet_at(a, order);
      const auto rhs = (p * q).jet_at(a, order);
      for (Eigen::Index r = 0; r < lhs.coefficients().size(); ++r)
        CHECK(lhs.coefficients()[r] == rhs.coefficients()[r]);
    }
  }
}

TEST_CASE("taylor identity closes with the remainder sum") {
  // f(x) = q_k(x) + sum over |beta| = k+1 of R_beta(x) (x-a)^beta
  SplitMix64 rng(17);
  std::vector<SmoothFn<double>> fns{exp_fn(), sin_fn()};
  for (int t = 0; t < 4; ++t)
    fns.emplace_back(random_polynomial(rng, 1, 5, 4).cast<double>());

  for (const auto& f : fns) {
    for (int k = 1; k <= 3; ++k) {
      const Eigen::VectorXd a = dpoint({0.25});
      const auto q = taylor_polynomial(f, a, k);
      for (double xv : {-0.5, 0.4, 1.1}) {
        const Eigen::VectorXd x = dpoint({xv});
        double rest = 0.0;
        for (const auto& beta : multi_indices_up_to(1, k + 1)) {
          if (degree(beta) != k + 1) continue;
          rest += taylor_remainder_quadrature(f, a, beta, x) * std::pow(xv - a[0], k + 1);
        }
        CHECK(std::abs(f(x) - q(x) - rest) < 1e-8);
      }
    }
  }
}

TEST_CASE("taylor identity in two variables") {
  // f(x, y) = sin(x - y): remainders over all |beta| = k + 1 close the gap
  Eigen::VectorXd c(2);
  c << 1.0, -1.0;
  const auto f = analytic_affine(AnalyticKind::Sin, c, 0.3);
  const Eigen::VectorXd a = dpoint({0.1, -0.2});
  for (int k = 1; k <= 3; ++k) {
    const auto q = taylor_polynomial(f, a, k);
    for (const auto& xv : {dpoint({0.6, 0.1}), dpoint({-0.3, 0.4})}) {
      double rest = 0.0;
      for (const auto& beta : multi_indices_up_to(2, k + 1)) {
        if (degree(beta) != k + 1) continue;
        double monomial = 1.0;
        for (int i = 0; i < 2; ++i)
          for (int e = 0; e < beta[i]; ++e) monomial *= xv[i] - a[i];
        rest += taylor_remainder_quadrature(f, a, beta, xv) * monomial;
      }
      CHECK(std::abs(f(xv) - q(xv) - rest) < 1e-8);
    }
  }
}

TEST_CASE("scaled residual decays dyadically toward the base point") {
  // (f(x) - q_k(x)) / |x - a|^k must shrink along x -> a
  for (const auto& f : {exp_fn(), sin_fn()}) {
    const Eigen::VectorXd a = dpoint({0.0});
    for (int k = 1; k <= 3; ++k) {
      const auto q = taylor_polynomial(f, a, k);
      double prev = std::numeric_limits<double>::infinity();
      for (int step = 0; step < 4; ++step) {
        const double h = 0.5 / (1 << step);
        const Eigen::VectorXd x = dpoint({h});
        const double scaled = std::abs(f(x) - q(x)) / std::pow(h, k);
        CHECK(scaled < prev);
        prev = scaled;
      }
    }
  }
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  const QuadratureRule rule = gauss_legendre_01(8);
  // degree-15 polynomial t^15 on [0,1]: exact value 1/16
  double acc = 0.0;
  for (int i = 0; i < 8; ++i) acc += rule.weights[i] * std::pow(rule.nodes[i], 15);
  CHECK(acc == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
  CHECK(rule.weights.sum() == doctest::Approx(1.0));
}
