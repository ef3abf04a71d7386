#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "jetop/piecewise_poly.hpp"
#include "jetop/polynomial.hpp"
#include "jetop/smooth_fn.hpp"
#include "jetop/smoothness.hpp"

namespace jetop {

/// Pointwise samples of a coefficient on a fixed grid; the landing type for
/// numeric reconstruction. No interpolation: evaluation requires a grid hit.
class GridSamples {
 public:
  GridSamples(Eigen::MatrixXd points, Eigen::VectorXd values,
              std::optional<int> declared_class = {});

  int dim() const { return static_cast<int>(points_.cols()); }
  int size() const { return static_cast<int>(points_.rows()); }
  const Eigen::MatrixXd& points() const { return points_; }
  const Eigen::VectorXd& values() const { return values_; }
  std::optional<int> declared_class() const { return declared_class_; }

  /// Value at a grid point (L-inf match within 1e-12); DomainError otherwise.
  double value_at(const Eigen::VectorXd& x) const;

  double max_abs() const { return size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff(); }

 private:
  Eigen::MatrixXd points_;
  Eigen::VectorXd values_;
  std::optional<int> declared_class_;
};

/// One coefficient function a_alpha: exact polynomial, exact univariate
/// piecewise polynomial, or sampled grid values.
class CoefficientFn {
 public:
  enum class Kind { Polynomial, Piecewise, Grid };

  CoefficientFn(Polynomial<Rational> p) : v_(std::move(p)) {}  // NOLINT: implicit by design
  CoefficientFn(PiecewisePoly pw) : v_(std::move(pw)) {}       // NOLINT
  CoefficientFn(GridSamples g) : v_(std::move(g)) {}           // NOLINT

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_exact() const { return kind() != Kind::Grid; }

  int dim() const;

  /// Polynomial: unbounded. Piecewise: computed exactly. Grid: the declared
  /// class if any (advisory), unbounded otherwise.
  Smoothness smoothness() const;

  Rational eval_exact(const VecQ& x) const;
  double eval(const Eigen::VectorXd& x) const;

  /// Identically zero; exact kinds decided exactly, grids via max |value|.
  bool is_zero(double grid_tol = 1e-9) const;

  const Polynomial<Rational>& poly() const { return std::get<Polynomial<Rational>>(v_); }
  const PiecewisePoly& pw() const { return std::get<PiecewisePoly>(v_); }
  const GridSamples& grid() const { return std::get<GridSamples>(v_); }

 private:
  std::variant<Polynomial<Rational>, PiecewisePoly, GridSamples> v_;
};

/// Differential operator in normal form: a sparse map alpha -> a_alpha with
/// |alpha| <= nominal order. The zero operator is the empty map.
class DiffOperator {
 public:
  /// The univariate zero operator.
  DiffOperator() : DiffOperator(1, 0) {}
  DiffOperator(int dim, int nominal_order);

  static DiffOperator zero(int dim) { return DiffOperator(dim, 0); }

  /// Multiplication by an exact coefficient (order-0 operator).
  static DiffOperator multiplication(CoefficientFn a0);

  /// c * d^alpha with a constant coefficient.
  static DiffOperator monomial_derivative_op(int dim, const MultiIndex& alpha,
                                             const Rational& c = Rational(1));

  int dim() const { return dim_; }
  int nominal_order() const { return nominal_order_; }

  DiffOperator& set_coefficient(const MultiIndex& alpha, CoefficientFn coeff);

  const std::map<MultiIndex, CoefficientFn>& coefficients() const { return coeffs_; }
  const CoefficientFn* coefficient(const MultiIndex& alpha) const;

  bool all_exact() const;

 private:
  int dim_;
  int nominal_order_;
  std::map<MultiIndex, CoefficientFn> coeffs_;
};

/// Highest degree carrying a coefficient that is not identically zero;
/// nullopt for the zero operator.
std::optional<int> effective_order(const DiffOperator& op, double grid_tol = 1e-9);

struct CoefficientClassEntry {
  MultiIndex alpha;
  CoefficientFn::Kind kind;
  Smoothness smoothness;
  bool advisory;  // true for sampled coefficients, whose class is declared
};

struct CoefficientClassReport {
  std::vector<CoefficientClassEntry> entries;
  Smoothness min_class;  // over all stored coefficients
  bool any_advisory = false;
};

CoefficientClassReport coefficient_class(const DiffOperator& op);

/// sum_alpha a_alpha(x) d^alpha f(x); derivatives come from f's jet at x.
template <class Scalar>
Scalar apply(const DiffOperator& op, const SmoothFn<Scalar>& f, const VecX<Scalar>& x) {
  if (f.dim() != op.dim()) throw DimensionError("apply: function/operator dimension mismatch");
  if (static_cast<int>(x.size()) != op.dim())
    throw DimensionError("apply: point/operator dimension mismatch");
  const std::optional<int> order = effective_order(op);
  if (!order.has_value()) return Scalar(0);
  if (!f.smoothness().at_least(*order))
    throw SmoothnessError("apply: function class below operator order " + std::to_string(*order));
  const Jet<Scalar> jet = f.jet_at(x, *order);
  Scalar acc(0);
  for (const auto& [alpha, coeff] : op.coefficients()) {
    Scalar a;
    if constexpr (scalar_traits<Scalar>::is_exact) {
      a = coeff.eval_exact(x);
    } else {
      a = coeff.eval(x);
    }
    acc += a * jet.derivative(alpha);
  }
  return acc;
}

/// Coefficient-wise equality: exact kinds compare exactly; any sampled
/// coefficient falls back to max |a_P - a_Q| <= tol over the grid.
bool operator_equal(const DiffOperator& p, const DiffOperator& q,
                    const std::vector<Eigen::VectorXd>& grid = {}, double tol = 1e-9);

/// Exact polynomial image sum_alpha a_alpha * d^alpha p. Requires polynomial
/// coefficients (for univariate piecewise coefficients see
/// pw_apply_operator).
Polynomial<Rational> apply_to_polynomial(const DiffOperator& op, const Polynomial<Rational>& p);

}  // namespace jetop
