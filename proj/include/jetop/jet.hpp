#pragma once

#include <memory>
#include <utility>

#include "jetop/multi_index.hpp"
#include "jetop/rational.hpp"

namespace jetop {

/// Truncated Taylor expansion of a function at a base point.
///
/// coeff(alpha) stores the coefficient of (x - base)^alpha, i.e.
/// d^alpha f(base) / alpha!. Storage is dense over the graded-lex basis of
/// all |alpha| <= order. Sums and truncated products are exact through the
/// stated order for exact scalars.
template <class Scalar>
class Jet {
 public:
  Jet(VecX<Scalar> base, int order)
      : base_(std::move(base)),
        order_(order),
        basis_(monomial_basis(static_cast<int>(base_.size()), order)),
        coeffs_(VecX<Scalar>::Constant(basis_->size(), Scalar(0))) {
    if (order_ < 0) throw ParameterError("Jet: negative order");
  }

  static Jet constant(VecX<Scalar> base, int order, const Scalar& value) {
    Jet j(std::move(base), order);
    j.coeffs_[0] = value;
    return j;
  }

  int dim() const { return static_cast<int>(base_.size()); }
  int order() const { return order_; }
  const VecX<Scalar>& base() const { return base_; }
  const MonomialBasis& basis() const { return *basis_; }

  const VecX<Scalar>& coefficients() const { return coeffs_; }
  VecX<Scalar>& coefficients() { return coeffs_; }

  /// Coefficient of (x - base)^alpha; zero beyond the truncation order.
  Scalar coeff(const MultiIndex& alpha) const {
    if (alpha.dim() != dim()) throw DimensionError("Jet::coeff: dimension mismatch");
    const int r = basis_->rank_of(alpha);
    return r < 0 ? Scalar(0) : coeffs_[r];
  }

  void set_coeff(const MultiIndex& alpha, const Scalar& v) {
    const int r = basis_->rank_of(alpha);
    if (r < 0) throw ParameterError("Jet::set_coeff: index beyond truncation order");
    coeffs_[r] = v;
  }

  Scalar value() const { return coeffs_[0]; }

  /// d^alpha f(base) = alpha! * coeff(alpha).
  Scalar derivative(const MultiIndex& alpha) const {
    return scalar_traits<Scalar>::from_integer(factorial(alpha)) * coeff(alpha);
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    a.check_aligned(b, "+");
    Jet out = a;
    out.coeffs_ += b.coeffs_;
    return out;
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    a.check_aligned(b, "-");
    Jet out = a;
    out.coeffs_ -= b.coeffs_;
    return out;
  }

  /// Truncated Cauchy product; exact through the common order.
  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check_aligned(b, "*");
    Jet out(a.base_, a.order_);
    const MonomialBasis& basis = *a.basis_;
    for (int i = 0; i < basis.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      const int di = degree(basis[i]);
      for (int j = 0; j < basis.size(); ++j) {
        if (di + degree(basis[j]) > a.order_) break;  // graded order: degrees ascend
        const int r = basis.rank_of(basis[i] + basis[j]);
        out.coeffs_[r] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  friend Jet operator*(const Scalar& c, const Jet& a) {
    Jet out = a;
    for (Eigen::Index i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = c * out.coeffs_[i];
    return out;
  }
  friend Jet operator*(const Jet& a, const Scalar& c) { return c * a; }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == Scalar(0))) return false;
    return true;
  }

 private:
  void check_aligned(const Jet& other, const char* op) const {
    if (dim() != other.dim())
      throw DimensionError(std::string("Jet") + op + ": dimension mismatch");
    if (order_ != other.order_)
      throw AlignmentError(std::string("Jet") + op + ": order mismatch");
    for (Eigen::Index i = 0; i < base_.size(); ++i)
      if (!(base_[i] == other.base_[i]))
        throw AlignmentError(std::string("Jet") + op + ": base point mismatch");
  }

  VecX<Scalar> base_;
  int order_;
  std::shared_ptr<const MonomialBasis> basis_;
  VecX<Scalar> coeffs_;
};

}  // namespace jetop
