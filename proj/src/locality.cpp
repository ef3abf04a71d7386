#include "jetop/locality.hpp"

#include "jetop/taylor.hpp"

#include <cmath>

namespace jetop {

namespace {

constexpr double kPi = 3.14159265358979323846;

double mollifier(double t) {
  const double t2 = t * t;
  return t2 < 1.0 ? std::exp(-1.0 / (1.0 - t2)) : 0.0;
}

}  // namespace

SpherePartition::SpherePartition(int dim, double cap_half_angle)
    : dim_(dim), half_angle_(cap_half_angle), cos_boundary_(std::cos(2.0 * cap_half_angle)) {
  if (dim < 1) throw DimensionError("SpherePartition: dimension must be >= 1");
  if (!(cap_half_angle > kPi / 4.0 && cap_half_angle < kPi / 2.0))
    throw CoverageError("SpherePartition: caps cover the sphere only for half-angle in (pi/4, pi/2)");
}

double SpherePartition::weight_from_cos(double cos_to_pole) const {
  // normalized cap coordinate: 0 at the pole, 1 at the support boundary
  const double t = (1.0 - cos_to_pole) / (1.0 - cos_boundary_);
  return mollifier(t);
}

double SpherePartition::normalized(int cap, double cos_north) const {
  const double w_north = weight_from_cos(cos_north);
  const double w_south = weight_from_cos(-cos_north);
  return (cap == kNorth ? w_north : w_south) / (w_north + w_south);
}

double SpherePartition::value(int cap, const Eigen::VectorXd& x) const {
  if (static_cast<int>(x.size()) != dim_) throw DimensionError("SpherePartition::value: dimension");
  const double norm = x.norm();
  if (norm == 0.0) throw ApexError("SpherePartition::value: zero vector has no direction");
  return normalized(cap, x[dim_ - 1] / norm);
}

double SpherePartition::value_at_angle(int cap, double polar_angle) const {
  return normalized(cap, std::cos(polar_angle));
}

SmoothFn<double> SpherePartition::angle_profile(int cap) const {
  SpherePartition self = *this;
  return callable_fn(1, Smoothness::unbounded(),
                     [self, cap](const Eigen::VectorXd& a) { return self.value_at_angle(cap, a[0]); });
}

ConeCutoff::ConeCutoff(SpherePartition partition, int cap)
    : partition_(std::move(partition)), cap_(cap) {
  if (cap != SpherePartition::kNorth && cap != SpherePartition::kSouth)
    throw ParameterError("ConeCutoff: cap index must be 0 (north) or 1 (south)");
}

double ConeCutoff::operator()(const Eigen::VectorXd& x) const {
  if (static_cast<int>(x.size()) != dim()) throw DimensionError("ConeCutoff: dimension mismatch");
  const double norm = x.norm();
  if (norm == 0.0) throw ApexError("ConeCutoff: undefined at the apex");
  return partition_.normalized(cap_, x[dim() - 1] / norm);
}

double ConeCutoff::operator()(const VecQ& x) const {
  if (static_cast<int>(x.size()) != dim()) throw DimensionError("ConeCutoff: dimension mismatch");
  Rational norm2(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) norm2 += x[i] * x[i];
  if (norm2.is_zero()) throw ApexError("ConeCutoff: undefined at the apex");
  const Rational last = x[x.size() - 1];
  // direction cosine squared is scale-invariant as an exact rational, so the
  // subsequent floating-point steps see identical inputs for x and lambda*x
  const Rational cos2 = (last * last) / norm2;
  const double cos_north =
      (last.sign() >= 0 ? 1.0 : -1.0) * std::sqrt(cos2.to_double());
  return partition_.normalized(cap_, cos_north);
}

SmoothFn<double> ConeCutoff::as_smooth_fn() const {
  ConeCutoff self = *this;
  return callable_fn(dim(), Smoothness::unbounded(),
                     [self](const Eigen::VectorXd& x) { return self(x); });
}

SpherePartition build_partition(int dim, double cap_half_angle) {
  return SpherePartition(dim, cap_half_angle);
}

ConeCutoff radial_extension(const SpherePartition& partition, int cap) {
  return ConeCutoff(partition, cap);
}

SmoothFn<double> cutoff_product(const ConeCutoff& psi, const SmoothFn<double>& phi,
                                int flat_order, double tol) {
  if (psi.dim() != phi.dim()) throw DimensionError("cutoff_product: dimension mismatch");
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(psi.dim());
  if (!vanishes_to_order(phi, origin, flat_order, tol))
    throw FlatnessError("cutoff_product: function does not vanish to order " +
                        std::to_string(flat_order) + " at the origin");
  ConeCutoff cutoff = psi;
  SmoothFn<double> phi_copy = phi;
  return SmoothFn<double>(
      psi.dim(), Smoothness::finite(0),
      [cutoff, phi_copy](const Eigen::VectorXd& a, int order) {
        Jet<double> jet(a, order);
        const double value =
            a.cwiseAbs().maxCoeff() == 0.0 ? 0.0 : cutoff(a) * phi_copy.jet_at(a, 0).value();
        jet.coefficients()[0] = value;
        return jet;
      });
}

SupportConditionReport support_condition_check(const BlackBox& u, const SmoothFn<double>& f,
                                               const Eigen::VectorXd& support_lo,
                                               const Eigen::VectorXd& support_hi,
                                               const std::vector<Eigen::VectorXd>& grid,
                                               double tol) {
  SupportConditionReport report;
  for (const auto& x : grid) {
    bool outside = false;
    for (Eigen::Index i = 0; i < x.size(); ++i)
      if (x[i] < support_lo[i] || x[i] > support_hi[i]) {
        outside = true;
        break;
      }
    if (!outside) continue;
    ++report.points_checked;
    const double v = std::abs(u.apply_numeric(f, x));
    report.worst_outside = std::max(report.worst_outside, v);
  }
  report.pass = report.worst_outside <= tol;
  return report;
}

FlatnessTransferReport flatness_transfer_check(const BlackBox& u, int m, int trials,
                                               SplitMix64& rng, double tol) {
  FlatnessTransferReport report;
  report.exact = u.has_symbolic();
  const int n = u.dim();
  const Eigen::VectorXd origin_d = Eigen::VectorXd::Zero(n);
  const VecQ origin_q = VecQ::Constant(n, Rational(0));

  for (int t = 0; t < trials; ++t) {
    const Polynomial<Rational> probe = random_flat_polynomial(rng, n, m);
    double violation;
    if (report.exact) {
      violation = std::abs(u.apply_symbolic(probe)(origin_q).to_double());
    } else {
      violation = std::abs(u.apply_numeric(SmoothFn<double>(probe.cast<double>()), origin_d));
    }
    if (violation > report.worst_violation) {
      report.worst_violation = violation;
      report.worst_probe = probe;
    }
  }
  report.pass = report.worst_violation <= tol;
  return report;
}

SmoothFn<double> bump_fn(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  if (lo.size() != hi.size()) throw DimensionError("bump_fn: box dimension mismatch");
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i])) throw ParameterError("bump_fn: empty box");
  const int dim = static_cast<int>(lo.size());
  return callable_fn(dim, Smoothness::unbounded(), [lo, hi](const Eigen::VectorXd& x) {
    double v = 1.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double t = (2.0 * x[i] - lo[i] - hi[i]) / (hi[i] - lo[i]);
      v *= mollifier(t);
      if (v == 0.0) return 0.0;
    }
    return v;
  });
}

}  // namespace jetop
