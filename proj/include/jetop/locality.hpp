#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "jetop/reconstruct.hpp"
#include "jetop/smooth_fn.hpp"

namespace jetop {

/// Two-cap partition of unity on the unit sphere.
///
/// Caps sit at the north/south poles (+-e_last). A cap of half-angle h
/// spans polar angles within 2h of its pole, so for h in (pi/4, pi/2) the
/// caps overlap in an equatorial band and neither contains the opposite
/// pole. Each bump is the standard mollifier profile exp(-1/(1-t^2)) in the
/// normalized cap coordinate, divided by the pair sum, hence:
/// exact zero outside the cap, values in [0,1], and an exact sum of 1.
class SpherePartition {
 public:
  static constexpr int kNorth = 0;
  static constexpr int kSouth = 1;

  SpherePartition(int dim, double cap_half_angle);

  int dim() const { return dim_; }
  double cap_half_angle() const { return half_angle_; }
  /// cos of the cap's angular radius (the support boundary).
  double cos_boundary() const { return cos_boundary_; }
  int cap_count() const { return 2; }

  /// Unnormalized mollifier weight from the cosine of the angle to the
  /// cap's own pole.
  double weight_from_cos(double cos_to_pole) const;

  /// phi_i at a point of the sphere (x is normalized internally).
  double value(int cap, const Eigen::VectorXd& x) const;

  /// phi_i as a function of the polar angle from the north pole.
  double value_at_angle(int cap, double polar_angle) const;

  /// The bump as a univariate function of the polar angle; jets by finite
  /// differences.
  SmoothFn<double> angle_profile(int cap) const;

 private:
  friend class ConeCutoff;
  double normalized(int cap, double cos_north) const;

  int dim_;
  double half_angle_;
  double cos_boundary_;
};

/// Degree-0 homogeneous extension psi_i(x) = phi_i(x / |x|) to punctured
/// space; vanishes identically on the open cone over the opposite cap's
/// complement and is undefined at the apex.
class ConeCutoff {
 public:
  ConeCutoff(SpherePartition partition, int cap);

  int dim() const { return partition_.dim(); }
  int cap() const { return cap_; }
  const SpherePartition& partition() const { return partition_; }

  double operator()(const Eigen::VectorXd& x) const;

  /// Exact-direction evaluation: the direction cosine is computed in
  /// rational arithmetic, so psi(lambda x) == psi(x) bit-for-bit for any
  /// rational lambda > 0.
  double operator()(const VecQ& x) const;

  /// Finite-difference jets away from the apex.
  SmoothFn<double> as_smooth_fn() const;

 private:
  SpherePartition partition_;
  int cap_;
};

SpherePartition build_partition(int dim, double cap_half_angle);
ConeCutoff radial_extension(const SpherePartition& partition, int cap);

/// psi * phi extended by zero at the origin. Requires phi flat to order
/// `flat_order` at 0 (all derivatives of order <= flat_order vanish);
/// throws FlatnessError otherwise. The result is declared C^0: it is
/// continuous at the apex and the pointwise identity
/// phi = sum_i psi_i phi holds away from it.
SmoothFn<double> cutoff_product(const ConeCutoff& psi, const SmoothFn<double>& phi,
                                int flat_order, double tol = 1e-9);

struct SupportConditionReport {
  bool pass = true;
  double worst_outside = 0.0;
  int points_checked = 0;
};

/// Checks supp(u(f)) inside supp(f): u(f) must vanish (<= tol) at every grid
/// point outside the declared support box of f.
SupportConditionReport support_condition_check(const BlackBox& u, const SmoothFn<double>& f,
                                               const Eigen::VectorXd& support_lo,
                                               const Eigen::VectorXd& support_hi,
                                               const std::vector<Eigen::VectorXd>& grid,
                                               double tol = 1e-9);

struct FlatnessTransferReport {
  bool pass = true;
  bool exact = false;  // violations computed in exact arithmetic
  double worst_violation = 0.0;
  std::optional<Polynomial<Rational>> worst_probe;
};

/// Flat inputs must map to flat outputs: u(phi)(0) = 0 for random polynomial
/// probes with all derivatives of order <= m vanishing at 0. True
/// differential operators of order <= m pass exactly; nonlocal boxes fail.
FlatnessTransferReport flatness_transfer_check(const BlackBox& u, int m, int trials,
                                               SplitMix64& rng, double tol = 1e-9);

/// Mollifier bump supported exactly on the box [lo, hi] (product of per-axis
/// profiles); zero outside by construction.
SmoothFn<double> bump_fn(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi);

}  // namespace jetop
