#pragma once

#include <Eigen/Core>

#include "jetop/polynomial.hpp"
#include "jetop/smooth_fn.hpp"

namespace jetop {

/// d^alpha f(a), read off the jet (alpha! times the jet coefficient).
template <class Scalar>
Scalar derivative_at(const SmoothFn<Scalar>& f, const MultiIndex& alpha, const VecX<Scalar>& a) {
  return f.jet_at(a, degree(alpha)).derivative(alpha);
}

/// The degree-<=k Taylor polynomial of f at a: the unique polynomial whose
/// jet at a equals f's jet at a through order k.
template <class Scalar>
Polynomial<Scalar> taylor_polynomial(const SmoothFn<Scalar>& f, const VecX<Scalar>& a, int k) {
  const Jet<Scalar> jet = f.jet_at(a, k);
  // sum of coeff(beta) * h^beta, then substitute h = x - a
  Polynomial<Scalar> in_h(f.dim(), k);
  const MonomialBasis& basis = jet.basis();
  for (int r = 0; r < basis.size(); ++r) in_h.set_coeff(basis[r], jet.coefficients()[r]);
  VecX<Scalar> minus_a(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) minus_a[i] = Scalar(-1) * a[i];
  return in_h.shifted(minus_a);
}

/// True iff every derivative of order <= m vanishes at x0 (exactly for exact
/// scalars, within `tol` otherwise).
template <class Scalar>
bool vanishes_to_order(const SmoothFn<Scalar>& f, const VecX<Scalar>& x0, int m,
                       double tol = 1e-9) {
  const Jet<Scalar> jet = f.jet_at(x0, m);
  for (Eigen::Index r = 0; r < jet.coefficients().size(); ++r)
    if (!scalar_traits<Scalar>::negligible(jet.coefficients()[r], tol)) return false;
  return true;
}

/// Gauss-Legendre rule on [0, 1].
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Nodes/weights via the Golub-Welsch eigenvalue method, mapped to [0, 1].
QuadratureRule gauss_legendre_01(int n);

/// Remainder coefficient R_beta(x) of the order-(|beta|-1) Taylor expansion
/// at a, in integral form:
///   R_beta(x) = (|beta|/beta!) * integral_0^1 (1-t)^(|beta|-1)
///               d^beta f(a + t(x-a)) dt,
/// evaluated by fixed-order Gauss-Legendre quadrature.
double taylor_remainder_quadrature(const SmoothFn<double>& f, const Eigen::VectorXd& a,
                                   const MultiIndex& beta, const Eigen::VectorXd& x,
                                   int nodes = 32);

}  // namespace jetop
