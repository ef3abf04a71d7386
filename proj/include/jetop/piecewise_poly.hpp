#pragma once

#include <vector>

#include "jetop/polynomial.hpp"
#include "jetop/rational.hpp"
#include "jetop/smoothness.hpp"

namespace jetop {

class DiffOperator;

/// Exact univariate piecewise polynomial with rational breakpoints.
///
/// Pieces are closed on the left: piece i covers [breakpoint[i-1],
/// breakpoint[i]), with unbounded end intervals. Continuity across
/// breakpoints is never assumed; it is what smoothness_class_at computes.
class PiecewisePoly {
 public:
  /// The zero function (one zero piece, no breakpoints).
  PiecewisePoly();

  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial<Rational>> pieces);

  static PiecewisePoly from_polynomial(const Polynomial<Rational>& p);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial<Rational>>& pieces() const { return pieces_; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  /// Piece index whose interval contains x (value taken from the right at a
  /// breakpoint).
  int piece_index(const Rational& x) const;

  bool is_zero() const;
  int max_piece_degree() const;

  /// Piecewise derivative; breakpoints unchanged. Whether the result is a
  /// derivative in the classical sense at the breakpoints is exactly what
  /// smoothness_class_at answers.
  PiecewisePoly derivative() const;

  /// Drops breakpoints whose adjacent pieces are the same polynomial.
  PiecewisePoly simplified() const;

  friend PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b);
  friend PiecewisePoly operator*(const PiecewisePoly& a, const PiecewisePoly& b);
  friend PiecewisePoly operator*(const Rational& c, const PiecewisePoly& f);
  PiecewisePoly operator-() const { return Rational(-1) * (*this); }
  friend PiecewisePoly operator-(const PiecewisePoly& a, const PiecewisePoly& b) {
    return a + (-b);
  }
  friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    return (a - b).is_zero();
  }

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Polynomial<Rational>> pieces_;
};

/// Largest k such that the one-sided derivative values of orders 0..k agree
/// at x0. Unbounded when x0 is interior to a piece or the adjacent pieces
/// are the same polynomial; C^-1 (finite(-1)) marks a jump.
Smoothness smoothness_class_at(const PiecewisePoly& f, const Rational& x0);

/// Minimum class over all breakpoints; unbounded when there are none.
Smoothness smoothness_class(const PiecewisePoly& f);

/// The canonical function of class exactly C^order at x0 and smooth
/// elsewhere: (x - x0)^order * |x - x0|.
PiecewisePoly smoothness_witness(int order, const Rational& x0);

/// Applies a univariate differential operator with exact coefficients to f,
/// exactly, merging breakpoints. Throws UndefinedDerivativeError when the
/// operator's order exceeds f's smoothness class at some breakpoint; that
/// error doubles as the degenerate-regime classification signal.
PiecewisePoly pw_apply_operator(const DiffOperator& op, const PiecewisePoly& f);

}  // namespace jetop
