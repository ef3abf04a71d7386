#include "jetop/diff_operator.hpp"

#include <algorithm>
#include <set>

namespace jetop {

GridSamples::GridSamples(Eigen::MatrixXd points, Eigen::VectorXd values,
                         std::optional<int> declared_class)
    : points_(std::move(points)), values_(std::move(values)), declared_class_(declared_class) {
  if (points_.rows() != values_.size())
    throw ParameterError("GridSamples: point/value count mismatch");
  if (points_.cols() < 1) throw DimensionError("GridSamples: dimension must be >= 1");
}

double GridSamples::value_at(const Eigen::VectorXd& x) const {
  if (x.size() != points_.cols()) throw DimensionError("GridSamples::value_at: dimension mismatch");
  for (int i = 0; i < size(); ++i) {
    if ((points_.row(i).transpose() - x).cwiseAbs().maxCoeff() <= 1e-12) return values_[i];
  }
  throw DomainError("GridSamples::value_at: point not on the sample grid");
}

int CoefficientFn::dim() const {
  switch (kind()) {
    case Kind::Polynomial: return poly().dim();
    case Kind::Piecewise: return 1;
    case Kind::Grid: return grid().dim();
  }
  throw ParameterError("CoefficientFn::dim: unreachable");
}

Smoothness CoefficientFn::smoothness() const {
  switch (kind()) {
    case Kind::Polynomial: return Smoothness::unbounded();
    case Kind::Piecewise: return smoothness_class(pw());
    case Kind::Grid:
      return grid().declared_class() ? Smoothness::finite(*grid().declared_class())
                                     : Smoothness::unbounded();
  }
  throw ParameterError("CoefficientFn::smoothness: unreachable");
}

Rational CoefficientFn::eval_exact(const VecQ& x) const {
  switch (kind()) {
    case Kind::Polynomial: return poly()(x);
    case Kind::Piecewise:
      if (x.size() != 1) throw DimensionError("CoefficientFn::eval_exact: piecewise is univariate");
      return pw()(x[0]);
    case Kind::Grid:
      throw InconclusiveError("CoefficientFn::eval_exact: sampled coefficient has no exact value");
  }
  throw ParameterError("CoefficientFn::eval_exact: unreachable");
}

double CoefficientFn::eval(const Eigen::VectorXd& x) const {
  if (kind() == Kind::Grid) return grid().value_at(x);
  return eval_exact(to_rational(x)).to_double();
}

bool CoefficientFn::is_zero(double grid_tol) const {
  switch (kind()) {
    case Kind::Polynomial: return poly().is_zero();
    case Kind::Piecewise: return pw().is_zero();
    case Kind::Grid: return grid().max_abs() <= grid_tol;
  }
  throw ParameterError("CoefficientFn::is_zero: unreachable");
}

DiffOperator::DiffOperator(int dim, int nominal_order) : dim_(dim), nominal_order_(nominal_order) {
  if (dim < 1) throw DimensionError("DiffOperator: dimension must be >= 1");
  if (nominal_order < 0) throw ParameterError("DiffOperator: negative order");
}

DiffOperator DiffOperator::multiplication(CoefficientFn a0) {
  const int dim = a0.dim();
  DiffOperator op(dim, 0);
  op.set_coefficient(MultiIndex::zero(dim), std::move(a0));
  return op;
}

DiffOperator DiffOperator::monomial_derivative_op(int dim, const MultiIndex& alpha,
                                                  const Rational& c) {
  DiffOperator op(dim, degree(alpha));
  op.set_coefficient(alpha, Polynomial<Rational>::constant(dim, c));
  return op;
}

DiffOperator& DiffOperator::set_coefficient(const MultiIndex& alpha, CoefficientFn coeff) {
  if (alpha.dim() != dim_) throw DimensionError("DiffOperator::set_coefficient: index dimension");
  if (degree(alpha) > nominal_order_)
    throw ParameterError("DiffOperator::set_coefficient: degree exceeds nominal order");
  if (coeff.dim() != dim_)
    throw DimensionError("DiffOperator::set_coefficient: coefficient dimension");
  coeffs_.insert_or_assign(alpha, std::move(coeff));
  return *this;
}

const CoefficientFn* DiffOperator::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? nullptr : &it->second;
}

bool DiffOperator::all_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second.is_exact(); });
}

std::optional<int> effective_order(const DiffOperator& op, double grid_tol) {
  std::optional<int> order;
  for (const auto& [alpha, coeff] : op.coefficients()) {
    if (coeff.is_zero(grid_tol)) continue;
    order = std::max(order.value_or(0), degree(alpha));
  }
  return order;
}

CoefficientClassReport coefficient_class(const DiffOperator& op) {
  CoefficientClassReport report;
  report.min_class = Smoothness::unbounded();
  for (const auto& [alpha, coeff] : op.coefficients()) {
    const bool advisory = coeff.kind() == CoefficientFn::Kind::Grid;
    const Smoothness s = coeff.smoothness();
    report.entries.push_back({alpha, coeff.kind(), s, advisory});
    report.min_class = Smoothness::min(report.min_class, s);
    report.any_advisory = report.any_advisory || advisory;
  }
  return report;
}

namespace {

bool exact_coefficients_equal(const CoefficientFn* a, const CoefficientFn* b, int dim) {
  auto as_pw = [](const CoefficientFn& c) {
    return c.kind() == CoefficientFn::Kind::Piecewise ? c.pw()
                                                      : PiecewisePoly::from_polynomial(c.poly());
  };
  if (a == nullptr && b == nullptr) return true;
  if (a == nullptr) return b->is_zero();
  if (b == nullptr) return a->is_zero();
  if (a->kind() == CoefficientFn::Kind::Polynomial && b->kind() == CoefficientFn::Kind::Polynomial)
    return a->poly() == b->poly();
  if (dim != 1)
    throw DimensionError("operator_equal: mixed exact kinds only compare in one dimension");
  return (as_pw(*a) - as_pw(*b)).is_zero();
}

}  // namespace

Polynomial<Rational> apply_to_polynomial(const DiffOperator& op, const Polynomial<Rational>& p) {
  if (p.dim() != op.dim()) throw DimensionError("apply_to_polynomial: dimension mismatch");
  Polynomial<Rational> out(op.dim());
  for (const auto& [alpha, coeff] : op.coefficients()) {
    if (coeff.kind() != CoefficientFn::Kind::Polynomial)
      throw InconclusiveError("apply_to_polynomial: non-polynomial coefficient");
    out = out + coeff.poly() * p.derivative(alpha);
  }
  return out;
}

bool operator_equal(const DiffOperator& p, const DiffOperator& q,
                    const std::vector<Eigen::VectorXd>& grid, double tol) {
  if (p.dim() != q.dim()) throw DimensionError("operator_equal: dimension mismatch");

  std::set<MultiIndex> keys;
  for (const auto& kv : p.coefficients()) keys.insert(kv.first);
  for (const auto& kv : q.coefficients()) keys.insert(kv.first);

  for (const auto& alpha : keys) {
    const CoefficientFn* cp = p.coefficient(alpha);
    const CoefficientFn* cq = q.coefficient(alpha);
    const bool exact = (cp == nullptr || cp->is_exact()) && (cq == nullptr || cq->is_exact());
    if (exact) {
      if (!exact_coefficients_equal(cp, cq, p.dim())) return false;
      continue;
    }
    if (grid.empty())
      throw ParameterError("operator_equal: sampled coefficients need a comparison grid");
    for (const auto& x : grid) {
      const double vp = cp ? cp->eval(x) : 0.0;
      const double vq = cq ? cq->eval(x) : 0.0;
      if (std::abs(vp - vq) > tol) return false;
    }
  }
  return true;
}

}  // namespace jetop
