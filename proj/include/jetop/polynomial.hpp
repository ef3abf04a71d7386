#pragma once

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "jetop/jet.hpp"
#include "jetop/multi_index.hpp"
#include "jetop/rational.hpp"

namespace jetop {

/// Multivariate polynomial, dense over the graded-lex monomial basis.
///
/// The capacity (basis truncation degree) grows on demand; the actual degree
/// is always recomputed from the nonzero coefficients. All operations are
/// exact for exact scalars.
template <class Scalar>
class Polynomial {
 public:
  explicit Polynomial(int dim, int capacity_degree = 0)
      : dim_(dim),
        basis_(monomial_basis(dim, capacity_degree)),
        coeffs_(VecX<Scalar>::Constant(basis_->size(), Scalar(0))) {
    if (dim < 1) throw DimensionError("Polynomial: dimension must be >= 1");
  }

  static Polynomial zero(int dim) { return Polynomial(dim); }

  static Polynomial constant(int dim, const Scalar& c) {
    Polynomial p(dim);
    p.coeffs_[0] = c;
    return p;
  }

  static Polynomial monomial(int dim, const MultiIndex& alpha, const Scalar& c = Scalar(1)) {
    Polynomial p(dim, degree(alpha));
    p.set_coeff(alpha, c);
    return p;
  }

  /// The coordinate function x_axis.
  static Polynomial variable(int dim, int axis) {
    return monomial(dim, MultiIndex::unit(dim, axis), Scalar(1));
  }

  /// Univariate polynomial from ascending coefficients c0 + c1 x + ...
  static Polynomial univariate(const std::vector<Scalar>& ascending) {
    const int deg = std::max<int>(0, static_cast<int>(ascending.size()) - 1);
    Polynomial p(1, deg);
    for (int k = 0; k < static_cast<int>(ascending.size()); ++k)
      p.coeffs_[k] = ascending[k];  // univariate graded-lex rank of x^k is k
    return p;
  }

  int dim() const { return dim_; }
  int capacity_degree() const { return basis_->max_degree(); }
  const MonomialBasis& basis() const { return *basis_; }
  const VecX<Scalar>& coefficients() const { return coeffs_; }

  Scalar coeff(const MultiIndex& alpha) const {
    if (alpha.dim() != dim_) throw DimensionError("Polynomial::coeff: dimension mismatch");
    const int r = basis_->rank_of(alpha);
    return r < 0 ? Scalar(0) : coeffs_[r];
  }

  void set_coeff(const MultiIndex& alpha, const Scalar& v) {
    if (alpha.dim() != dim_) throw DimensionError("Polynomial::set_coeff: dimension mismatch");
    ensure_capacity(degree(alpha));
    coeffs_[basis_->rank_of(alpha)] = v;
  }

  void add_to_coeff(const MultiIndex& alpha, const Scalar& v) {
    if (alpha.dim() != dim_) throw DimensionError("Polynomial::add_to_coeff: dimension mismatch");
    ensure_capacity(degree(alpha));
    coeffs_[basis_->rank_of(alpha)] += v;
  }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == Scalar(0))) return false;
    return true;
  }

  /// Degree of the highest monomial with a nonzero coefficient; 0 for the
  /// zero polynomial.
  int degree_actual() const {
    int d = 0;
    for (int i = 0; i < basis_->size(); ++i)
      if (!(coeffs_[i] == Scalar(0))) d = std::max(d, degree((*basis_)[i]));
    return d;
  }

  Scalar operator()(const VecX<Scalar>& x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw DimensionError("Polynomial::operator(): point dimension mismatch");
    const int cap = capacity_degree();
    // power table: pow[i][k] = x_i^k
    std::vector<std::vector<Scalar>> pow(dim_, std::vector<Scalar>(cap + 1, Scalar(1)));
    for (int i = 0; i < dim_; ++i)
      for (int k = 1; k <= cap; ++k) pow[i][k] = pow[i][k - 1] * x[i];
    Scalar acc(0);
    for (int r = 0; r < basis_->size(); ++r) {
      if (coeffs_[r] == Scalar(0)) continue;
      Scalar term = coeffs_[r];
      const MultiIndex& alpha = (*basis_)[r];
      for (int i = 0; i < dim_; ++i) term *= pow[i][alpha[i]];
      acc += term;
    }
    return acc;
  }

  /// Convenience for univariate polynomials.
  Scalar eval1(const Scalar& x) const {
    if (dim_ != 1) throw DimensionError("Polynomial::eval1: not univariate");
    VecX<Scalar> p(1);
    p[0] = x;
    return (*this)(p);
  }

  /// Exact partial derivative d^beta p.
  Polynomial derivative(const MultiIndex& beta) const {
    if (beta.dim() != dim_) throw DimensionError("Polynomial::derivative: dimension mismatch");
    Polynomial out(dim_, std::max(0, capacity_degree() - degree(beta)));
    for (int r = 0; r < basis_->size(); ++r) {
      if (coeffs_[r] == Scalar(0)) continue;
      const MonomialDerivative d = monomial_derivative((*basis_)[r], beta);
      if (d.coefficient == 0) continue;
      out.add_to_coeff(d.exponent, scalar_traits<Scalar>::from_integer(d.coefficient) * coeffs_[r]);
    }
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_dim(b, "+");
    Polynomial out(a.dim_, std::max(a.capacity_degree(), b.capacity_degree()));
    for (int r = 0; r < a.basis_->size(); ++r) out.coeffs_[r] += a.coeffs_[r];
    for (int r = 0; r < b.basis_->size(); ++r)
      out.add_to_coeff((*b.basis_)[r], b.coeffs_[r]);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (Scalar(-1) * b);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_dim(b, "*");
    Polynomial out(a.dim_, a.degree_actual() + b.degree_actual());
    for (int i = 0; i < a.basis_->size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (int j = 0; j < b.basis_->size(); ++j) {
        if (b.coeffs_[j] == Scalar(0)) continue;
        out.add_to_coeff((*a.basis_)[i] + (*b.basis_)[j], a.coeffs_[i] * b.coeffs_[j]);
      }
    }
    return out;
  }

  friend Polynomial operator*(const Scalar& c, const Polynomial& p) {
    Polynomial out = p;
    for (Eigen::Index i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = c * out.coeffs_[i];
    return out;
  }
  friend Polynomial operator*(const Polynomial& p, const Scalar& c) { return c * p; }
  Polynomial operator-() const { return Scalar(-1) * (*this); }

  /// Equality as functions (capacities may differ).
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.dim_ != b.dim_) return false;
    return (a - b).is_zero();
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// p(x + s), expanded exactly.
  Polynomial shifted(const VecX<Scalar>& s) const {
    if (static_cast<int>(s.size()) != dim_)
      throw DimensionError("Polynomial::shifted: shift dimension mismatch");
    const int cap = capacity_degree();
    std::vector<std::vector<Scalar>> pow(dim_, std::vector<Scalar>(cap + 1, Scalar(1)));
    for (int i = 0; i < dim_; ++i)
      for (int k = 1; k <= cap; ++k) pow[i][k] = pow[i][k - 1] * s[i];
    Polynomial out(dim_, cap);
    Eigen::ArrayXi beta = Eigen::ArrayXi::Zero(dim_);
    for (int r = 0; r < basis_->size(); ++r) {
      if (coeffs_[r] == Scalar(0)) continue;
      const MultiIndex& alpha = (*basis_)[r];
      // expand prod_i (x_i + s_i)^{alpha_i} over all beta <= alpha
      beta.setZero();
      while (true) {
        Scalar term = coeffs_[r];
        for (int i = 0; i < dim_; ++i) {
          mpz_class binom;
          mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(alpha[i]),
                       static_cast<unsigned long>(beta[i]));
          term *= scalar_traits<Scalar>::from_integer(binom) * pow[i][alpha[i] - beta[i]];
        }
        out.add_to_coeff(MultiIndex(Eigen::ArrayXi(beta)), term);
        int i = 0;
        for (; i < dim_; ++i) {
          if (beta[i] < alpha[i]) {
            ++beta[i];
            break;
          }
          beta[i] = 0;
        }
        if (i == dim_) break;
      }
    }
    return out;
  }

  /// Restriction to the parametric line t -> anchor + t * direction, as a
  /// univariate polynomial in t.
  Polynomial restrict_to_line(const VecX<Scalar>& anchor, const VecX<Scalar>& direction) const {
    if (static_cast<int>(anchor.size()) != dim_ || static_cast<int>(direction.size()) != dim_)
      throw DimensionError("Polynomial::restrict_to_line: dimension mismatch");
    Polynomial out(1, degree_actual());
    for (int r = 0; r < basis_->size(); ++r) {
      if (coeffs_[r] == Scalar(0)) continue;
      const MultiIndex& alpha = (*basis_)[r];
      Polynomial term = Polynomial::constant(1, coeffs_[r]);
      for (int i = 0; i < dim_; ++i) {
        const Polynomial lin = Polynomial::univariate({anchor[i], direction[i]});
        for (int k = 0; k < alpha[i]; ++k) term = term * lin;
      }
      out = out + term;
    }
    return out;
  }

  /// Substitutes x_axis = value; the result no longer involves that
  /// variable (dimension is preserved).
  Polynomial substitute(int axis, const Scalar& value) const {
    if (axis < 0 || axis >= dim_) throw DimensionError("Polynomial::substitute: axis out of range");
    const int cap = capacity_degree();
    std::vector<Scalar> pow(cap + 1, Scalar(1));
    for (int k = 1; k <= cap; ++k) pow[k] = pow[k - 1] * value;
    Polynomial out(dim_, cap);
    for (int r = 0; r < basis_->size(); ++r) {
      if (coeffs_[r] == Scalar(0)) continue;
      Eigen::ArrayXi e = (*basis_)[r].exponents();
      const int k = e[axis];
      e[axis] = 0;
      out.add_to_coeff(MultiIndex(e), coeffs_[r] * pow[k]);
    }
    return out;
  }

  /// Freezes every variable except `axis` at the anchor's coordinates.
  Polynomial partial_evaluate(int axis, const VecX<Scalar>& anchor) const {
    VecX<Scalar> c = anchor;
    VecX<Scalar> v = VecX<Scalar>::Constant(dim_, Scalar(0));
    c[axis] = Scalar(0);
    v[axis] = Scalar(1);
    return restrict_to_line(c, v);
  }

  /// Jet at a: exact re-expansion around the base point.
  Jet<Scalar> jet_at(const VecX<Scalar>& a, int order) const {
    Polynomial recentered = shifted(a);  // q(h) = p(a + h)
    Jet<Scalar> jet(a, order);
    const MonomialBasis& jb = jet.basis();
    for (int r = 0; r < jb.size(); ++r) jet.coefficients()[r] = recentered.coeff(jb[r]);
    return jet;
  }

  template <class T>
  Polynomial<T> cast() const {
    Polynomial<T> out(dim_, capacity_degree());
    for (int r = 0; r < basis_->size(); ++r) {
      if (coeffs_[r] == Scalar(0)) continue;
      out.set_coeff((*basis_)[r], static_cast<T>(scalar_traits<Scalar>::to_double(coeffs_[r])));
    }
    return out;
  }

 private:
  void check_dim(const Polynomial& other, const char* op) const {
    if (dim_ != other.dim_)
      throw DimensionError(std::string("Polynomial") + op + ": dimension mismatch");
  }

  void ensure_capacity(int deg) {
    if (deg <= capacity_degree()) return;
    auto bigger = monomial_basis(dim_, deg);
    VecX<Scalar> grown = VecX<Scalar>::Constant(bigger->size(), Scalar(0));
    grown.head(coeffs_.size()) = coeffs_;  // graded-lex ranks are prefix-stable
    basis_ = std::move(bigger);
    coeffs_ = std::move(grown);
  }

  int dim_;
  std::shared_ptr<const MonomialBasis> basis_;
  VecX<Scalar> coeffs_;
};

using PolyQ = Polynomial<Rational>;

}  // namespace jetop
