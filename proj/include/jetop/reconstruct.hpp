#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jetop/diff_operator.hpp"
#include "jetop/random.hpp"

namespace jetop {

/// Evaluation-only linear local operator: the reconstruction input.
///
/// Two capabilities: a symbolic one mapping polynomial probes to exact
/// polynomial images (present when the subject supports it), and a numeric
/// one returning u(f)(x) pointwise. Linearity and locality are hypotheses,
/// spot-checked by the dedicated checks rather than enforced.
class BlackBox {
 public:
  using SymbolicFn = std::function<Polynomial<Rational>(const Polynomial<Rational>&)>;
  using NumericFn = std::function<double(const SmoothFn<double>&, const Eigen::VectorXd&)>;

  BlackBox(std::string name, int dim, int source_class, int target_class, SymbolicFn symbolic,
           NumericFn numeric)
      : name_(std::move(name)),
        dim_(dim),
        source_class_(source_class),
        target_class_(target_class),
        symbolic_(std::move(symbolic)),
        numeric_(std::move(numeric)),
        calls_(std::make_shared<std::atomic<long>>(0)) {}

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int source_class() const { return source_class_; }
  int target_class() const { return target_class_; }

  bool has_symbolic() const { return static_cast<bool>(symbolic_); }

  Polynomial<Rational> apply_symbolic(const Polynomial<Rational>& probe) const;
  double apply_numeric(const SmoothFn<double>& f, const Eigen::VectorXd& x) const;

  /// Total black-box invocations so far (shared across copies).
  long calls() const { return calls_->load(); }

 private:
  std::string name_;
  int dim_;
  int source_class_;
  int target_class_;
  SymbolicFn symbolic_;
  NumericFn numeric_;
  std::shared_ptr<std::atomic<long>> calls_;
};

/// Wraps a differential operator as a black box. Symbolic probing is
/// available iff every coefficient is polynomial.
BlackBox black_box(const DiffOperator& op, std::optional<int> source_class = {},
                   std::optional<int> target_class = {});

/// Nonlocal adversary u(f)(x) = f(x + shift), optionally riding on top of a
/// true operator: u(f)(x) = base(f)(x) + f(x + shift).
BlackBox shift_black_box(int dim, const VecQ& shift, std::optional<DiffOperator> base = {});

/// Nonlinear adversary u(f) = f^2.
BlackBox square_black_box(int dim);

/// Nonlinear adversary u(f) = |f| (pointwise; no symbolic capability).
BlackBox abs_black_box(int dim);

struct ExtractionOptions {
  /// Divide the degree-t correction by alpha!. The uncorrected variant (the
  /// raw induction formula) is kept for comparison; it fails to annihilate
  /// the probe monomials whenever |alpha| > 1.
  bool factorial_normalization = true;
};

/// Recovers a differential operator of nominal order `max_order` from
/// polynomial probes, by induction on probe degree:
///   a_0 = u(1),
///   a_alpha = (1/alpha!) [ u(x^alpha) - sum_{|beta|<|alpha|} a_beta d^beta x^alpha ].
/// Exact: coefficients are polynomials.
DiffOperator extract_coefficients(const BlackBox& u, int max_order,
                                  const ExtractionOptions& options = {});

/// Numeric variant: the same induction run pointwise on a grid; coefficients
/// land as grid samples.
DiffOperator extract_coefficients_on_grid(const BlackBox& u, int max_order,
                                          const std::vector<Eigen::VectorXd>& grid,
                                          const ExtractionOptions& options = {});

/// max |u(f)(x) - P(f)(x)| over exact polynomial tests and rational grid
/// points; exact. A zero residual on all polynomials of degree <= m pins the
/// whole morphism: degree-<= m polynomials determine it.
Rational residual_check_symbolic(const BlackBox& u, const DiffOperator& p,
                                 const std::vector<Polynomial<Rational>>& tests,
                                 const std::vector<VecQ>& grid);

/// Numeric counterpart over arbitrary smooth tests.
double residual_check(const BlackBox& u, const DiffOperator& p,
                      const std::vector<SmoothFn<double>>& tests,
                      const std::vector<Eigen::VectorXd>& grid);

struct LinearityReport {
  bool pass = true;
  double worst_violation = 0.0;
};

/// Probes u(f + c g) - u(f) - c u(g) on random polynomial pairs; exact when
/// the box is symbolic, pointwise otherwise.
LinearityReport linearity_spot_check(const BlackBox& u, int trials,
                                     const std::vector<Eigen::VectorXd>& grid, SplitMix64& rng,
                                     double tol = 1e-9);

struct ReconstructionReport {
  DiffOperator recovered;
  bool symbolic = true;
  long probes_used = 0;
  double max_residual = 0.0;
  bool residual_exact_zero = false;
};

}  // namespace jetop
