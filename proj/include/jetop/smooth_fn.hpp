#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "jetop/jet.hpp"
#include "jetop/polynomial.hpp"
#include "jetop/smoothness.hpp"

namespace jetop {

/// A function known through its jets: given (point, order) it produces its
/// truncated Taylor expansion there, up to a declared smoothness class.
///
/// Value-semantic handle; combinators build new closures over jet
/// arithmetic, so sums and products of exact functions stay exact.
template <class Scalar>
class SmoothFn {
 public:
  using JetFn = std::function<Jet<Scalar>(const VecX<Scalar>&, int)>;

  SmoothFn(int dim, Smoothness smoothness, JetFn jets)
      : dim_(dim), smoothness_(smoothness), jets_(std::move(jets)) {
    if (dim < 1) throw DimensionError("SmoothFn: dimension must be >= 1");
  }

  /// Polynomials are smooth everywhere; jets are exact re-expansions.
  SmoothFn(const Polynomial<Scalar>& p)  // NOLINT: implicit by design
      : dim_(p.dim()),
        smoothness_(Smoothness::unbounded()),
        jets_([p](const VecX<Scalar>& a, int order) { return p.jet_at(a, order); }) {}

  int dim() const { return dim_; }
  Smoothness smoothness() const { return smoothness_; }

  Jet<Scalar> jet_at(const VecX<Scalar>& a, int order) const {
    if (static_cast<int>(a.size()) != dim_)
      throw DimensionError("SmoothFn::jet_at: point dimension mismatch");
    if (!smoothness_.at_least(order))
      throw SmoothnessError("SmoothFn::jet_at: order " + std::to_string(order) +
                            " exceeds declared class " + smoothness_.str());
    return jets_(a, order);
  }

  Scalar operator()(const VecX<Scalar>& x) const { return jet_at(x, 0).value(); }

  friend SmoothFn operator+(const SmoothFn& f, const SmoothFn& g) {
    f.check_dim(g, "+");
    return SmoothFn(f.dim_, Smoothness::min(f.smoothness_, g.smoothness_),
                    [f, g](const VecX<Scalar>& a, int order) {
                      return f.jet_at(a, order) + g.jet_at(a, order);
                    });
  }

  friend SmoothFn operator-(const SmoothFn& f, const SmoothFn& g) {
    return f + (Scalar(-1) * g);
  }

  friend SmoothFn operator*(const SmoothFn& f, const SmoothFn& g) {
    f.check_dim(g, "*");
    return SmoothFn(f.dim_, Smoothness::min(f.smoothness_, g.smoothness_),
                    [f, g](const VecX<Scalar>& a, int order) {
                      return f.jet_at(a, order) * g.jet_at(a, order);
                    });
  }

  friend SmoothFn operator*(const Scalar& c, const SmoothFn& f) {
    return SmoothFn(f.dim_, f.smoothness_,
                    [c, f](const VecX<Scalar>& a, int order) { return c * f.jet_at(a, order); });
  }
  friend SmoothFn operator*(const SmoothFn& f, const Scalar& c) { return c * f; }

 private:
  void check_dim(const SmoothFn& other, const char* op) const {
    if (dim_ != other.dim_)
      throw DimensionError(std::string("SmoothFn") + op + ": dimension mismatch");
  }

  int dim_;
  Smoothness smoothness_;
  JetFn jets_;
};

namespace detail {

/// Nested second-order central differences for d^alpha f(x).
inline double fd_derivative(const std::function<double(const Eigen::VectorXd&)>& f,
                            const MultiIndex& alpha, const Eigen::VectorXd& x, double h) {
  int axis = -1;
  for (int i = 0; i < alpha.dim(); ++i)
    if (alpha[i] > 0) {
      axis = i;
      break;
    }
  if (axis < 0) return f(x);
  MultiIndex rest = alpha - MultiIndex::unit(alpha.dim(), axis);
  Eigen::VectorXd xp = x, xm = x;
  xp[axis] += h;
  xm[axis] -= h;
  return (fd_derivative(f, rest, xp, h) - fd_derivative(f, rest, xm, h)) / (2.0 * h);
}

}  // namespace detail

/// Wraps a plain callable as a SmoothFn whose jets come from central finite
/// differences. Intended for functions with no tractable closed-form jets
/// (cone cutoffs, bumps); differentiation accuracy degrades with order.
inline SmoothFn<double> callable_fn(int dim, Smoothness smoothness,
                                    std::function<double(const Eigen::VectorXd&)> f,
                                    double fd_step = 1e-4) {
  return SmoothFn<double>(
      dim, smoothness, [dim, f = std::move(f), fd_step](const Eigen::VectorXd& a, int order) {
        Jet<double> jet(a, order);
        const MonomialBasis& basis = jet.basis();
        for (int r = 0; r < basis.size(); ++r) {
          const MultiIndex& alpha = basis[r];
          const double d = detail::fd_derivative(f, alpha, a, fd_step);
          jet.coefficients()[r] = d / factorial(alpha).get_d();
        }
        return jet;
      });
}

enum class AnalyticKind { Exp, Sin, Cos };

/// g(c . x + b) for g in {exp, sin, cos}; jets from the derivative cycle of
/// g, exact up to floating-point rounding.
inline SmoothFn<double> analytic_affine(AnalyticKind kind, Eigen::VectorXd c, double b) {
  const int dim = static_cast<int>(c.size());
  auto g_derivative = [kind](int order, double t) -> double {
    switch (kind) {
      case AnalyticKind::Exp:
        return std::exp(t);
      case AnalyticKind::Sin:
        switch (order % 4) {
          case 0: return std::sin(t);
          case 1: return std::cos(t);
          case 2: return -std::sin(t);
          default: return -std::cos(t);
        }
      case AnalyticKind::Cos:
        switch (order % 4) {
          case 0: return std::cos(t);
          case 1: return -std::sin(t);
          case 2: return -std::cos(t);
          default: return std::sin(t);
        }
    }
    throw ParameterError("analytic_affine: unknown kind");
  };
  return SmoothFn<double>(
      dim, Smoothness::unbounded(),
      [c = std::move(c), b, g_derivative](const Eigen::VectorXd& a, int order) {
        const double t = c.dot(a) + b;
        Jet<double> jet(a, order);
        const MonomialBasis& basis = jet.basis();
        for (int r = 0; r < basis.size(); ++r) {
          const MultiIndex& alpha = basis[r];
          double chain = 1.0;
          for (int i = 0; i < alpha.dim(); ++i)
            for (int k = 0; k < alpha[i]; ++k) chain *= c[i];
          jet.coefficients()[r] =
              g_derivative(degree(alpha), t) * chain / factorial(alpha).get_d();
        }
        return jet;
      });
}

/// exp, sin, cos of a single coordinate, convenience for 1-D tests.
inline SmoothFn<double> exp_fn(int dim = 1, int axis = 0) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
  c[axis] = 1.0;
  return analytic_affine(AnalyticKind::Exp, c, 0.0);
}
inline SmoothFn<double> sin_fn(int dim = 1, int axis = 0) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
  c[axis] = 1.0;
  return analytic_affine(AnalyticKind::Sin, c, 0.0);
}
inline SmoothFn<double> cos_fn(int dim = 1, int axis = 0) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
  c[axis] = 1.0;
  return analytic_affine(AnalyticKind::Cos, c, 0.0);
}

}  // namespace jetop
