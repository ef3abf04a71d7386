#pragma once

#include <optional>
#include <string>

#include "jetop/diff_operator.hpp"
#include "jetop/piecewise_poly.hpp"

namespace jetop {

/// The trichotomy for morphisms C^m -> C^r: operators of order <= m - r when
/// r < m, pure multiplications when r = m, and only the zero operator when
/// r > m.
enum class Regime { OrderBounded, MultiplicationOnly, ForcedZero };

std::string regime_name(Regime regime);

/// Exact certificate that an operator fails a claimed (m, r) mapping: a
/// C^m probe b, built from a one-sided kink of class exactly m (or a plain
/// polynomial when a low-smoothness coefficient is the culprit), whose image
/// P(b), restricted to a rational line, has smoothness class < r at the
/// breakpoint. Everything is computed in exact arithmetic.
struct ViolationWitness {
  /// Coefficient the certificate targets.
  MultiIndex offending_alpha;
  /// The probe line is t -> anchor + t * direction.
  VecQ direction;
  VecQ line_anchor;
  /// Kink location (parameter value on the line).
  Rational breakpoint;
  /// Monomial exponent in the off-line variables multiplying the kink
  /// factor (all-zero when unused); the probe is
  /// witness_profile(t) * x^off_axis_exponent.
  MultiIndex off_axis_exponent;
  /// Univariate factor of the probe along the line.
  PiecewisePoly witness_profile;
  /// P(probe) restricted to the line.
  PiecewisePoly output_on_line;
  /// Exact class of the output at the breakpoint; < target class.
  Smoothness output_class;
};

struct ClassificationVerdict {
  Regime regime = Regime::ForcedZero;
  bool pass = false;
  int source_class = 0;  // m
  int target_class = 0;  // r
  /// Permitted order for the OrderBounded regime (m - r).
  std::optional<int> order_bound;
  /// nullopt for the zero operator.
  std::optional<int> operator_order;
  Smoothness min_coefficient_class;
  std::optional<ViolationWitness> violation;
};

/// Decides which regime a morphism C^m -> C^r the operator claims to be
/// actually falls in. Requires exact coefficients; sampled coefficients
/// throw InconclusiveError. On failure the verdict carries an exact witness.
ClassificationVerdict classify(const DiffOperator& op, int m, int r);

/// Searches for an exact violation certificate; empty when the operator
/// genuinely maps C^m into C^r. Axis-aligned kink probes (optionally carrying
/// an off-axis monomial) come first; a general directional kink
/// w((v.x) - s) covers mixed-derivative order violations the axis probes
/// cannot reach.
std::optional<ViolationWitness> find_violation_witness(const DiffOperator& op, int m, int r);

/// For k < m <= n and an operator passing at target class n, checks that it
/// also passes at the looser target k (the inclusion of the stricter
/// operator space into the looser one). Precondition violations throw
/// ParameterError.
bool diagram_consistency(int m, int n, int k, const DiffOperator& op);

}  // namespace jetop
