#include "jetop/piecewise_poly.hpp"

#include <algorithm>

#include "jetop/diff_operator.hpp"

namespace jetop {

namespace {

const MultiIndex& d1() {
  static const MultiIndex d{1};
  return d;
}

}  // namespace

PiecewisePoly::PiecewisePoly() : pieces_(1, Polynomial<Rational>::zero(1)) {}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints,
                             std::vector<Polynomial<Rational>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breakpoints_.size() + 1)
    throw ParameterError("PiecewisePoly: piece count must be breakpoint count + 1");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw ParameterError("PiecewisePoly: breakpoints must be strictly increasing");
  for (const auto& p : pieces_)
    if (p.dim() != 1) throw DimensionError("PiecewisePoly: pieces must be univariate");
}

PiecewisePoly PiecewisePoly::from_polynomial(const Polynomial<Rational>& p) {
  if (p.dim() != 1) throw DimensionError("PiecewisePoly::from_polynomial: not univariate");
  return PiecewisePoly({}, {p});
}

int PiecewisePoly::piece_index(const Rational& x) const {
  int i = 0;
  while (i < static_cast<int>(breakpoints_.size()) && breakpoints_[i] <= x) ++i;
  return i;
}

Rational PiecewisePoly::operator()(const Rational& x) const {
  return pieces_[piece_index(x)].eval1(x);
}

double PiecewisePoly::operator()(double x) const {
  return (*this)(Rational::from_double(x)).to_double();
}

bool PiecewisePoly::is_zero() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Polynomial<Rational>& p) { return p.is_zero(); });
}

int PiecewisePoly::max_piece_degree() const {
  int d = 0;
  for (const auto& p : pieces_) d = std::max(d, p.degree_actual());
  return d;
}

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<Polynomial<Rational>> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(p.derivative(d1()));
  return PiecewisePoly(breakpoints_, std::move(out));
}

PiecewisePoly PiecewisePoly::simplified() const {
  std::vector<Rational> bps;
  std::vector<Polynomial<Rational>> pieces{pieces_.front()};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (pieces_[i + 1] == pieces.back()) continue;
    bps.push_back(breakpoints_[i]);
    pieces.push_back(pieces_[i + 1]);
  }
  return PiecewisePoly(std::move(bps), std::move(pieces));
}

namespace {

template <class Combine>
PiecewisePoly merge(const PiecewisePoly& a, const PiecewisePoly& b, Combine combine) {
  std::vector<Rational> bps;
  std::merge(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
             b.breakpoints().end(), std::back_inserter(bps));
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  std::vector<Polynomial<Rational>> pieces;
  pieces.reserve(bps.size() + 1);
  for (std::size_t cell = 0; cell <= bps.size(); ++cell) {
    // a sample inside the cell identifies the source piece on each side
    Rational sample;
    if (bps.empty()) {
      sample = Rational(0);
    } else if (cell == 0) {
      sample = bps.front() - Rational(1);
    } else if (cell == bps.size()) {
      sample = bps.back();  // cells are closed on the left
    } else {
      sample = (bps[cell - 1] + bps[cell]) / Rational(2);
    }
    pieces.push_back(combine(a.pieces()[a.piece_index(sample)], b.pieces()[b.piece_index(sample)]));
  }
  return PiecewisePoly(std::move(bps), std::move(pieces)).simplified();
}

}  // namespace

PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b) {
  return merge(a, b,
               [](const Polynomial<Rational>& p, const Polynomial<Rational>& q) { return p + q; });
}

PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b) {
  return merge(a, b,
               [](const Polynomial<Rational>& p, const Polynomial<Rational>& q) { return p * q; });
}

PiecewisePoly operator*(const Rational& c, const PiecewisePoly& f) {
  std::vector<Polynomial<Rational>> pieces;
  pieces.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) pieces.push_back(c * p);
  return PiecewisePoly(f.breakpoints(), std::move(pieces));
}

Smoothness smoothness_class_at(const PiecewisePoly& f, const Rational& x0) {
  const auto& bps = f.breakpoints();
  const auto it = std::find(bps.begin(), bps.end(), x0);
  if (it == bps.end()) return Smoothness::unbounded();
  const int i = static_cast<int>(it - bps.begin());
  Polynomial<Rational> left = f.pieces()[i];
  Polynomial<Rational> right = f.pieces()[i + 1];
  const int max_order = std::max(left.degree_actual(), right.degree_actual());
  for (int k = 0; k <= max_order; ++k) {
    if (!(left.eval1(x0) == right.eval1(x0))) return Smoothness::finite(k - 1);
    left = left.derivative(d1());
    right = right.derivative(d1());
  }
  // all derivative values agree up to the joint degree: same polynomial
  return Smoothness::unbounded();
}

Smoothness smoothness_class(const PiecewisePoly& f) {
  Smoothness out = Smoothness::unbounded();
  for (const auto& b : f.breakpoints()) out = Smoothness::min(out, smoothness_class_at(f, b));
  return out;
}

PiecewisePoly smoothness_witness(int order, const Rational& x0) {
  if (order < 0) throw ParameterError("smoothness_witness: negative order");
  // (x - x0)^order * |x - x0|: pieces -(x-x0)^(order+1) / +(x-x0)^(order+1)
  Polynomial<Rational> x = Polynomial<Rational>::variable(1, 0);
  Polynomial<Rational> shift = x - Polynomial<Rational>::constant(1, x0);
  Polynomial<Rational> power = Polynomial<Rational>::constant(1, Rational(1));
  for (int k = 0; k < order + 1; ++k) power = power * shift;
  return PiecewisePoly({x0}, {-power, power});
}

PiecewisePoly pw_apply_operator(const DiffOperator& op, const PiecewisePoly& f) {
  if (op.dim() != 1) throw DimensionError("pw_apply_operator: operator must be univariate");
  if (!op.all_exact())
    throw InconclusiveError("pw_apply_operator: sampled coefficients cannot act exactly");

  const std::optional<int> order = effective_order(op);
  if (!order.has_value()) return PiecewisePoly();

  for (const auto& b : f.breakpoints()) {
    const Smoothness cls = smoothness_class_at(f, b);
    if (cls.is_finite() && *order > cls.value())
      throw UndefinedDerivativeError(
          "pw_apply_operator: order-" + std::to_string(*order) +
          " operator applied to a function of class " + cls.str() + " at breakpoint " + b.str());
  }

  // f, f', f'', ... up to the operator order
  std::vector<PiecewisePoly> derivs{f};
  for (int k = 1; k <= *order; ++k) derivs.push_back(derivs.back().derivative());

  PiecewisePoly out;
  for (const auto& [alpha, coeff] : op.coefficients()) {
    if (coeff.is_zero()) continue;  // may sit above the effective order
    const int k = degree(alpha);
    PiecewisePoly a = coeff.kind() == CoefficientFn::Kind::Piecewise
                          ? coeff.pw()
                          : PiecewisePoly::from_polynomial(coeff.poly());
    out = out + a * derivs[static_cast<std::size_t>(k)];
  }
  return out.simplified();
}

}  // namespace jetop
