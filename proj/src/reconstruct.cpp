#include "jetop/reconstruct.hpp"

#include <cmath>

namespace jetop {

Polynomial<Rational> BlackBox::apply_symbolic(const Polynomial<Rational>& probe) const {
  if (!symbolic_) throw ProbeError("BlackBox '" + name_ + "': no symbolic capability");
  if (probe.dim() != dim_) throw DimensionError("BlackBox::apply_symbolic: probe dimension");
  calls_->fetch_add(1);
  try {
    return symbolic_(probe);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ProbeError("BlackBox '" + name_ + "': symbolic probe failed: " + e.what());
  }
}

double BlackBox::apply_numeric(const SmoothFn<double>& f, const Eigen::VectorXd& x) const {
  if (!numeric_) throw ProbeError("BlackBox '" + name_ + "': no numeric capability");
  if (f.dim() != dim_) throw DimensionError("BlackBox::apply_numeric: function dimension");
  calls_->fetch_add(1);
  try {
    return numeric_(f, x);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ProbeError("BlackBox '" + name_ + "': numeric probe failed: " + e.what());
  }
}

BlackBox black_box(const DiffOperator& op, std::optional<int> source_class,
                   std::optional<int> target_class) {
  const int order = effective_order(op).value_or(0);
  const bool symbolic = std::all_of(
      op.coefficients().begin(), op.coefficients().end(),
      [](const auto& kv) { return kv.second.kind() == CoefficientFn::Kind::Polynomial; });

  BlackBox::SymbolicFn sym;
  if (symbolic)
    sym = [op](const Polynomial<Rational>& p) { return apply_to_polynomial(op, p); };

  return BlackBox("operator", op.dim(), source_class.value_or(order),
                  target_class.value_or(0), std::move(sym),
                  [op](const SmoothFn<double>& f, const Eigen::VectorXd& x) {
                    return apply(op, f, x);
                  });
}

BlackBox shift_black_box(int dim, const VecQ& shift, std::optional<DiffOperator> base) {
  if (static_cast<int>(shift.size()) != dim)
    throw DimensionError("shift_black_box: shift dimension mismatch");
  const Eigen::VectorXd shift_d = to_double(shift);

  BlackBox::SymbolicFn sym;
  const bool base_symbolic =
      !base.has_value() ||
      std::all_of(base->coefficients().begin(), base->coefficients().end(),
                  [](const auto& kv) { return kv.second.kind() == CoefficientFn::Kind::Polynomial; });
  if (base_symbolic) {
    sym = [shift, base](const Polynomial<Rational>& p) {
      Polynomial<Rational> out = p.shifted(shift);
      if (base.has_value()) out = out + apply_to_polynomial(*base, p);
      return out;
    };
  }

  return BlackBox("shift", dim, 0, 0, std::move(sym),
                  [shift_d, base](const SmoothFn<double>& f, const Eigen::VectorXd& x) {
                    double out = f.jet_at(x + shift_d, 0).value();
                    if (base.has_value()) out += apply(*base, f, x);
                    return out;
                  });
}

BlackBox square_black_box(int dim) {
  return BlackBox(
      "square", dim, 0, 0, [](const Polynomial<Rational>& p) { return p * p; },
      [](const SmoothFn<double>& f, const Eigen::VectorXd& x) {
        const double v = f.jet_at(x, 0).value();
        return v * v;
      });
}

BlackBox abs_black_box(int dim) {
  return BlackBox("abs", dim, 0, 0, nullptr,
                  [](const SmoothFn<double>& f, const Eigen::VectorXd& x) {
                    return std::abs(f.jet_at(x, 0).value());
                  });
}

DiffOperator extract_coefficients(const BlackBox& u, int max_order,
                                  const ExtractionOptions& options) {
  if (max_order < 0) throw ParameterError("extract_coefficients: negative order");
  if (!u.has_symbolic())
    throw ProbeError("extract_coefficients: black box has no symbolic capability");
  const int n = u.dim();

  std::map<MultiIndex, Polynomial<Rational>> recovered;
  for (const MultiIndex& alpha : multi_indices_up_to(n, max_order)) {
    Polynomial<Rational> probe = Polynomial<Rational>::monomial(n, alpha);
    Polynomial<Rational> image = [&] {
      try {
        return u.apply_symbolic(probe);
      } catch (const ProbeError& e) {
        std::string idx = "[";
        for (int i = 0; i < alpha.dim(); ++i)
          idx += (i ? "," : "") + std::to_string(alpha[i]);
        throw ProbeError(std::string(e.what()) + " (probe exponent " + idx + "])");
      }
    }();
    for (const auto& [beta, a_beta] : recovered) {
      if (degree(beta) >= degree(alpha)) continue;
      const MonomialDerivative d = monomial_derivative(alpha, beta);
      if (d.coefficient == 0) continue;
      // subtract a_beta * d^beta x^alpha in place (the derivative is a
      // single monomial, so this is a shifted scaled copy of a_beta)
      const Rational scale(d.coefficient);
      const MonomialBasis& ab = a_beta.basis();
      for (int rank = 0; rank < ab.size(); ++rank) {
        const Rational c = a_beta.coefficients()[rank];
        if (c.is_zero()) continue;
        image.add_to_coeff(ab[rank] + d.exponent, Rational(-1) * scale * c);
      }
    }
    if (options.factorial_normalization)
      image = image * (Rational(1) / Rational(factorial(alpha)));
    recovered.emplace(alpha, std::move(image));
  }

  DiffOperator op(n, max_order);
  for (const auto& [alpha, a] : recovered)
    if (!a.is_zero()) op.set_coefficient(alpha, a);
  return op;
}

DiffOperator extract_coefficients_on_grid(const BlackBox& u, int max_order,
                                          const std::vector<Eigen::VectorXd>& grid,
                                          const ExtractionOptions& options) {
  if (max_order < 0) throw ParameterError("extract_coefficients_on_grid: negative order");
  if (grid.empty()) throw ParameterError("extract_coefficients_on_grid: empty grid");
  const int n = u.dim();
  const std::vector<MultiIndex> probes = multi_indices_up_to(n, max_order);

  Eigen::MatrixXd points(static_cast<int>(grid.size()), n);
  for (int i = 0; i < static_cast<int>(grid.size()); ++i) points.row(i) = grid[i].transpose();

  std::map<MultiIndex, Eigen::VectorXd> values;
  for (const MultiIndex& alpha : probes)
    values.emplace(alpha, Eigen::VectorXd::Zero(static_cast<int>(grid.size())));

  for (int g = 0; g < static_cast<int>(grid.size()); ++g) {
    const Eigen::VectorXd& x = grid[g];
    for (const MultiIndex& alpha : probes) {
      const SmoothFn<double> probe(Polynomial<Rational>::monomial(n, alpha).cast<double>());
      double v = u.apply_numeric(probe, x);
      for (const MultiIndex& beta : probes) {
        if (degree(beta) >= degree(alpha)) continue;
        const MonomialDerivative d = monomial_derivative(alpha, beta);
        if (d.coefficient == 0) continue;
        double mono = d.coefficient.get_d();
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < d.exponent[i]; ++k) mono *= x[i];
        v -= values[beta][g] * mono;
      }
      if (options.factorial_normalization) v /= factorial(alpha).get_d();
      values[alpha][g] = v;
    }
  }

  DiffOperator op(n, max_order);
  for (const MultiIndex& alpha : probes) {
    if (values[alpha].cwiseAbs().maxCoeff() == 0.0) continue;
    op.set_coefficient(alpha, GridSamples(points, values[alpha]));
  }
  return op;
}

Rational residual_check_symbolic(const BlackBox& u, const DiffOperator& p,
                                 const std::vector<Polynomial<Rational>>& tests,
                                 const std::vector<VecQ>& grid) {
  Rational worst(0);
  for (const auto& f : tests) {
    const Polynomial<Rational> diff = u.apply_symbolic(f) - apply_to_polynomial(p, f);
    for (const auto& x : grid) worst = std::max(worst, diff(x).abs());
  }
  return worst;
}

double residual_check(const BlackBox& u, const DiffOperator& p,
                      const std::vector<SmoothFn<double>>& tests,
                      const std::vector<Eigen::VectorXd>& grid) {
  double worst = 0.0;
  for (const auto& f : tests)
    for (const auto& x : grid)
      worst = std::max(worst, std::abs(u.apply_numeric(f, x) - apply(p, f, x)));
  return worst;
}

LinearityReport linearity_spot_check(const BlackBox& u, int trials,
                                     const std::vector<Eigen::VectorXd>& grid, SplitMix64& rng,
                                     double tol) {
  LinearityReport report;
  const int n = u.dim();
  for (int t = 0; t < trials; ++t) {
    const Polynomial<Rational> f = random_polynomial(rng, n, 3);
    const Polynomial<Rational> g = random_polynomial(rng, n, 3);
    const Rational c = random_nonzero_rational(rng);

    if (u.has_symbolic()) {
      const Polynomial<Rational> defect =
          u.apply_symbolic(f + c * g) - u.apply_symbolic(f) - c * u.apply_symbolic(g);
      for (const auto& x : grid) {
        const double v = std::abs(defect(to_rational(x)).to_double());
        report.worst_violation = std::max(report.worst_violation, v);
      }
    } else {
      const SmoothFn<double> fd(f.cast<double>());
      const SmoothFn<double> gd(g.cast<double>());
      const SmoothFn<double> combo((f + c * g).cast<double>());
      const double cd = c.to_double();
      for (const auto& x : grid) {
        const double v = std::abs(u.apply_numeric(combo, x) - u.apply_numeric(fd, x) -
                                  cd * u.apply_numeric(gd, x));
        report.worst_violation = std::max(report.worst_violation, v);
      }
    }
  }
  report.pass = report.worst_violation <= tol;
  return report;
}

}  // namespace jetop
