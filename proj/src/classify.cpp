#include "jetop/classify.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace jetop {

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::OrderBounded: return "OrderBounded";
    case Regime::MultiplicationOnly: return "MultiplicationOnly";
    case Regime::ForcedZero: return "ForcedZero";
  }
  throw ParameterError("regime_name: unreachable");
}

namespace {

/// Deterministic sweep of simple rationals: 0, 1, -1, 1/2, -1/2, 2, -2, ...
Rational witness_candidate(int k) {
  if (k == 0) return Rational(0);
  const int j = k - 1;
  const long n = j / 4 + 1;
  switch (j % 4) {
    case 0: return Rational(1, n + 1);
    case 1: return Rational(-1, n + 1);
    case 2: return Rational(n);
    default: return Rational(-n);
  }
}

/// Substitutes the listed variables one at a time, each with a value keeping
/// the polynomial nonzero (possible whenever p != 0: a variable of degree d
/// survives one of any d+1 distinct values). Chosen values land in `point`.
bool ground_keeping_nonzero(Polynomial<Rational>& p, const std::vector<int>& vars, VecQ& point) {
  if (p.is_zero()) return false;
  for (int axis : vars) {
    bool done = false;
    for (int k = 0; k < p.capacity_degree() + 2 && !done; ++k) {
      const Rational value = witness_candidate(k);
      Polynomial<Rational> q = p.substitute(axis, value);
      if (!q.is_zero()) {
        p = std::move(q);
        point[axis] = value;
        done = true;
      }
    }
    if (!done) return false;
  }
  return true;
}

/// A univariate point where the exact coefficient is nonzero, avoiding the
/// exclusion set (breakpoints of other coefficients).
std::optional<Rational> find_nonvanishing_point(const CoefficientFn& coeff,
                                                const std::vector<Rational>& exclusions) {
  auto excluded = [&](const Rational& t) {
    return std::find(exclusions.begin(), exclusions.end(), t) != exclusions.end();
  };

  if (coeff.kind() == CoefficientFn::Kind::Polynomial) {
    const Polynomial<Rational>& p = coeff.poly();
    for (int k = 0;
         k < p.capacity_degree() + static_cast<int>(exclusions.size()) + 2; ++k) {
      const Rational t = witness_candidate(k);
      if (excluded(t)) continue;
      if (!(p.eval1(t) == Rational(0))) return t;
    }
    return std::nullopt;
  }

  const PiecewisePoly& f = coeff.pw();
  const auto& bps = f.breakpoints();
  const int pieces = static_cast<int>(f.pieces().size());
  for (int i = 0; i < pieces; ++i) {
    const Polynomial<Rational>& piece = f.pieces()[i];
    if (piece.is_zero()) continue;
    const int tries = piece.capacity_degree() + static_cast<int>(exclusions.size()) + 2;
    for (int j = 0; j < tries; ++j) {
      Rational t;
      if (bps.empty()) {
        t = witness_candidate(j);
      } else if (i == 0) {
        t = bps.front() - Rational(j + 1);
      } else if (i == pieces - 1) {
        t = bps.back() + Rational(j + 1);
      } else {
        // strictly inside (bps[i-1], bps[i])
        t = bps[i - 1] + (bps[i] - bps[i - 1]) * Rational(j + 1, tries + 1);
      }
      if (excluded(t)) continue;
      if (!(piece.eval1(t) == Rational(0))) return t;
    }
  }
  return std::nullopt;
}

MultiIndex zero_axis(const MultiIndex& alpha, int axis) {
  Eigen::ArrayXi e = alpha.exponents();
  e[axis] = 0;
  return MultiIndex(e);
}

std::vector<Rational> all_breakpoints(const DiffOperator& op) {
  std::vector<Rational> out;
  for (const auto& [alpha, coeff] : op.coefficients())
    if (coeff.kind() == CoefficientFn::Kind::Piecewise)
      for (const auto& b : coeff.pw().breakpoints()) out.push_back(b);
  return out;
}

std::optional<ViolationWitness> probe_sweep_certificate(const DiffOperator& op, int m, int r) {
  // Sites where some piecewise coefficient has class < r. The induction
  // P(1), P(x), ..., P(x^m) recovers every coefficient of level <= m as a
  // combination of the probe images, so if all images had class >= r at a
  // site, every coefficient would too; hence some probe certifies.
  struct Site {
    MultiIndex alpha;
    Rational breakpoint;
  };
  std::vector<Site> sites;
  for (const auto& [alpha, coeff] : op.coefficients()) {
    if (coeff.kind() != CoefficientFn::Kind::Piecewise) continue;
    for (const auto& b : coeff.pw().breakpoints()) {
      const Smoothness cls = smoothness_class_at(coeff.pw(), b);
      if (cls.is_finite() && cls.value() < r) sites.push_back({alpha, b});
    }
  }
  if (sites.empty()) return std::nullopt;

  for (int j = 0; j <= m; ++j) {
    const PiecewisePoly probe = PiecewisePoly::from_polynomial(
        Polynomial<Rational>::monomial(1, MultiIndex{j}));
    const PiecewisePoly out = pw_apply_operator(op, probe);
    for (const auto& site : sites) {
      const Smoothness cls = smoothness_class_at(out, site.breakpoint);
      if (cls.is_finite() && cls.value() < r) {
        ViolationWitness w;
        w.offending_alpha = site.alpha;
        w.direction = VecQ::Constant(1, Rational(1));
        w.line_anchor = VecQ::Constant(1, Rational(0));
        w.breakpoint = site.breakpoint;
        w.off_axis_exponent = MultiIndex::zero(1);
        w.witness_profile = probe;
        w.output_on_line = out;
        w.output_class = cls;
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<ViolationWitness> univariate_kink_certificate(const DiffOperator& op, int m, int r) {
  const int level = effective_order(op).value();
  if (level > m) return std::nullopt;  // not applicable to C^m at all
  if (m - level >= r) return std::nullopt;

  MultiIndex top{level};
  const CoefficientFn* a_top = op.coefficient(top);
  if (a_top == nullptr || a_top->is_zero()) {
    // effective order witnessed by a piecewise coefficient stored elsewhere?
    // cannot happen: level came from a nonzero coefficient at this degree
    return std::nullopt;
  }

  const std::optional<Rational> t0 = find_nonvanishing_point(*a_top, all_breakpoints(op));
  if (!t0.has_value()) return std::nullopt;

  const PiecewisePoly profile = smoothness_witness(m, *t0);
  const PiecewisePoly out = pw_apply_operator(op, profile);
  const Smoothness cls = smoothness_class_at(out, *t0);
  if (!(cls.is_finite() && cls.value() < r)) return std::nullopt;

  ViolationWitness w;
  w.offending_alpha = top;
  w.direction = VecQ::Constant(1, Rational(1));
  w.line_anchor = VecQ::Constant(1, Rational(0));
  w.breakpoint = *t0;
  w.off_axis_exponent = MultiIndex::zero(1);
  w.witness_profile = profile;
  w.output_on_line = out;
  w.output_class = cls;
  return w;
}

/// Axis-aligned kink probe: b(x) = w(x_axis) * x^gamma with w of class
/// exactly m at t0 and gamma supported off the axis. Restricted to the line
/// {x_j = anchor_j, x_axis free}, P(b) is an exact univariate piecewise
/// polynomial whose class at t0 drops to m - level when the targeted
/// level-`level` coefficient survives at the anchor.
std::optional<ViolationWitness> axis_kink_certificate(const DiffOperator& op, int m, int r,
                                                      int axis, int level) {
  const int n = op.dim();

  // off-axis exponents of the nonzero coefficients at this axis level
  std::set<MultiIndex> gammas;
  for (const auto& [alpha, coeff] : op.coefficients())
    if (alpha[axis] == level && !coeff.is_zero()) gammas.insert(zero_axis(alpha, axis));

  std::vector<int> off_axes;
  for (int j = 0; j < n; ++j)
    if (j != axis) off_axes.push_back(j);

  for (const MultiIndex& gamma : gammas) {
    // the probe is only C^m along the axis: skip gammas that would feed a
    // coefficient demanding more than m axis derivatives
    bool inadmissible = false;
    for (const auto& [alpha, coeff] : op.coefficients())
      if (!coeff.is_zero() && alpha[axis] > m && leq(zero_axis(alpha, axis), gamma))
        inadmissible = true;
    if (inadmissible) continue;

    // Jump amplitude of the targeted level on the probe line, as a
    // polynomial: sum over level coefficients of a_alpha * d^albar x^gamma.
    // For a componentwise-minimal gamma this reduces to gamma! * a_alpha,
    // so some gamma always yields a nonzero amplitude.
    Polynomial<Rational> amplitude(n);
    for (const auto& [alpha, coeff] : op.coefficients()) {
      if (alpha[axis] != level) continue;
      const MultiIndex albar = zero_axis(alpha, axis);
      const MonomialDerivative d = monomial_derivative(gamma, albar);
      if (d.coefficient == 0) continue;
      amplitude =
          amplitude + coeff.poly() * Polynomial<Rational>::monomial(n, d.exponent,
                                                                    Rational(d.coefficient));
    }
    if (amplitude.is_zero()) continue;

    VecQ anchor = VecQ::Constant(n, Rational(0));
    Polynomial<Rational> grounded = amplitude;
    if (!ground_keeping_nonzero(grounded, off_axes, anchor)) continue;
    const Polynomial<Rational> on_line = grounded.partial_evaluate(axis, anchor);

    std::optional<Rational> t0;
    for (int k = 0; k < on_line.capacity_degree() + 2 && !t0.has_value(); ++k) {
      const Rational t = witness_candidate(k);
      if (!(on_line.eval1(t) == Rational(0))) t0 = t;
    }
    if (!t0.has_value()) continue;

    // univariate operator seen by w(t) along the line
    DiffOperator line_op(1, level);
    for (int k = 0; k <= level; ++k) {
      Polynomial<Rational> qk(1);
      for (const auto& [alpha, coeff] : op.coefficients()) {
        if (alpha[axis] != k) continue;
        const MultiIndex albar = zero_axis(alpha, axis);
        const MonomialDerivative d = monomial_derivative(gamma, albar);
        if (d.coefficient == 0) continue;
        Rational factor(d.coefficient);
        for (int j = 0; j < n; ++j)
          for (int e = 0; e < d.exponent[j]; ++e) factor *= anchor[j];
        qk = qk + coeff.poly().partial_evaluate(axis, anchor) * factor;
      }
      if (!qk.is_zero()) line_op.set_coefficient(MultiIndex{k}, qk);
    }

    const PiecewisePoly profile = smoothness_witness(m, *t0);
    const PiecewisePoly out = pw_apply_operator(line_op, profile);
    const Smoothness cls = smoothness_class_at(out, *t0);
    if (!(cls.is_finite() && cls.value() < r)) continue;

    ViolationWitness w;
    w.offending_alpha = gamma + MultiIndex::unit(n, axis, level);
    w.direction = VecQ::Constant(n, Rational(0));
    w.direction[axis] = Rational(1);
    w.line_anchor = anchor;
    w.breakpoint = *t0;
    w.off_axis_exponent = gamma;
    w.witness_profile = profile;
    w.output_on_line = out;
    w.output_class = cls;
    return w;
  }
  return std::nullopt;
}

/// Directional kink probe b(x) = w((v.x) - s): reaches the full operator
/// order through mixed-derivative coefficients, which axis probes see only
/// level by level. v is grounded against the top-order symbol
/// sum_{|alpha|=K} a_alpha(x) v^alpha, so the kink survives with class
/// exactly m - K on the line.
std::optional<ViolationWitness> directional_kink_certificate(const DiffOperator& op, int m,
                                                             int r) {
  const int n = op.dim();
  const int order = effective_order(op).value();
  if (order > m || m - order >= r) return std::nullopt;

  // symbol in doubled variables (x_0..x_{n-1}, v_0..v_{n-1})
  Polynomial<Rational> symbol(2 * n);
  for (const auto& [alpha, coeff] : op.coefficients()) {
    if (degree(alpha) != order || coeff.is_zero()) continue;
    Eigen::ArrayXi e = Eigen::ArrayXi::Zero(2 * n);
    e.tail(n) = alpha.exponents();
    Polynomial<Rational> lifted(2 * n);
    // lift a_alpha(x) into the doubled space
    const auto& p = coeff.poly();
    for (int rank = 0; rank < p.basis().size(); ++rank) {
      const Rational c = p.coefficients()[rank];
      if (c == Rational(0)) continue;
      Eigen::ArrayXi le = Eigen::ArrayXi::Zero(2 * n);
      le.head(n) = p.basis()[rank].exponents();
      lifted.add_to_coeff(MultiIndex(le), c);
    }
    symbol = symbol + lifted * Polynomial<Rational>::monomial(2 * n, MultiIndex(e));
  }
  if (symbol.is_zero()) return std::nullopt;

  // ground v (the trailing block), then x, keeping the symbol nonzero
  std::vector<int> v_vars, x_vars;
  for (int j = 0; j < n; ++j) {
    v_vars.push_back(n + j);
    x_vars.push_back(j);
  }
  VecQ doubled = VecQ::Constant(2 * n, Rational(0));
  Polynomial<Rational> grounded = symbol;
  if (!ground_keeping_nonzero(grounded, v_vars, doubled)) return std::nullopt;
  if (!ground_keeping_nonzero(grounded, x_vars, doubled)) return std::nullopt;

  VecQ v(n), anchor(n);
  for (int j = 0; j < n; ++j) {
    v[j] = doubled[n + j];
    anchor[j] = doubled[j];
  }
  Rational nu(0);
  for (int j = 0; j < n; ++j) nu += v[j] * v[j];
  if (nu.is_zero()) return std::nullopt;

  const Rational t0(0);  // the symbol is nonzero at the anchor itself

  // q_j(t) = nu^{-j} sum_{|alpha|=j} a_alpha(anchor + t v) v^alpha,
  // acting on W(t) = nu^{m+1} w(t - t0)
  DiffOperator line_op(1, order);
  for (int j = 0; j <= order; ++j) {
    Polynomial<Rational> qj(1);
    for (const auto& [alpha, coeff] : op.coefficients()) {
      if (degree(alpha) != j) continue;
      Rational valpha(1);
      for (int i = 0; i < n; ++i)
        for (int e = 0; e < alpha[i]; ++e) valpha *= v[i];
      if (valpha.is_zero()) continue;
      qj = qj + coeff.poly().restrict_to_line(anchor, v) * valpha;
    }
    if (qj.is_zero()) continue;
    Rational nu_pow(1);
    for (int e = 0; e < j; ++e) nu_pow *= nu;
    line_op.set_coefficient(MultiIndex{j}, qj * (Rational(1) / nu_pow));
  }

  Rational scale(1);
  for (int e = 0; e < m + 1; ++e) scale *= nu;
  const PiecewisePoly profile = scale * smoothness_witness(m, t0);
  const PiecewisePoly out = pw_apply_operator(line_op, profile);
  const Smoothness cls = smoothness_class_at(out, t0);
  if (!(cls.is_finite() && cls.value() < r)) return std::nullopt;

  ViolationWitness w;
  // target any top-order coefficient for the report
  for (const auto& [alpha, coeff] : op.coefficients())
    if (degree(alpha) == order && !coeff.is_zero()) {
      w.offending_alpha = alpha;
      break;
    }
  w.direction = v;
  w.line_anchor = anchor;
  w.breakpoint = t0;
  w.off_axis_exponent = MultiIndex::zero(n);
  w.witness_profile = profile;
  w.output_on_line = out;
  w.output_class = cls;
  return w;
}

}  // namespace

std::optional<ViolationWitness> find_violation_witness(const DiffOperator& op, int m, int r) {
  if (m < 0 || r < 0) throw ParameterError("find_violation_witness: classes must be >= 0");
  if (!op.all_exact())
    throw InconclusiveError("find_violation_witness: exact coefficients required");

  const std::optional<int> order = effective_order(op);
  if (!order.has_value()) return std::nullopt;
  const int n = op.dim();

  if (auto w = probe_sweep_certificate(op, std::max(m, op.nominal_order()), r); w.has_value())
    return w;

  const bool order_violation = r > m || (r == m ? *order >= 1 : *order > m - r);
  if (!order_violation) return std::nullopt;

  if (n == 1) {
    if (auto w = univariate_kink_certificate(op, m, r); w.has_value()) return w;
    return std::nullopt;
  }

  // axes ranked by the highest usable level they expose
  std::vector<std::pair<int, int>> axis_levels;  // (level, axis)
  for (int axis = 0; axis < n; ++axis) {
    int level = -1;
    for (const auto& [alpha, coeff] : op.coefficients())
      if (!coeff.is_zero() && alpha[axis] <= m) level = std::max(level, alpha[axis]);
    if (level >= 0 && m - level < r) axis_levels.emplace_back(level, axis);
  }
  std::sort(axis_levels.rbegin(), axis_levels.rend());
  for (const auto& [level, axis] : axis_levels)
    if (auto w = axis_kink_certificate(op, m, r, axis, level); w.has_value()) return w;

  return directional_kink_certificate(op, m, r);
}

ClassificationVerdict classify(const DiffOperator& op, int m, int r) {
  if (m < 0 || r < 0) throw ParameterError("classify: classes must be >= 0");
  if (!op.all_exact()) throw InconclusiveError("classify: exact coefficients required");

  ClassificationVerdict verdict;
  verdict.source_class = m;
  verdict.target_class = r;
  verdict.operator_order = effective_order(op);
  verdict.min_coefficient_class = coefficient_class(op).min_class;

  const bool zero_op = !verdict.operator_order.has_value();
  const int order = verdict.operator_order.value_or(0);

  if (r > m) {
    verdict.regime = Regime::ForcedZero;
    verdict.pass = zero_op;
  } else if (r == m) {
    verdict.regime = Regime::MultiplicationOnly;
    verdict.pass = (zero_op || order == 0) && verdict.min_coefficient_class.at_least(m);
  } else {
    verdict.regime = Regime::OrderBounded;
    verdict.order_bound = m - r;
    verdict.pass = (zero_op || order <= m - r) && verdict.min_coefficient_class.at_least(r);
  }

  if (!verdict.pass) verdict.violation = find_violation_witness(op, m, r);
  return verdict;
}

bool diagram_consistency(int m, int n, int k, const DiffOperator& op) {
  if (!(k < m && m <= n))
    throw ParameterError("diagram_consistency: requires k < m <= n");
  if (!classify(op, m, n).pass)
    throw ParameterError("diagram_consistency: operator must pass at the stricter target class");
  return classify(op, m, k).pass;
}

}  // namespace jetop
