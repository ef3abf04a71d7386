#pragma once

#include <string>

#include "jetop/errors.hpp"

namespace jetop {

/// A differentiability class: C^k for finite k, or C^inf.
///
/// k = -1 is allowed and means "not even continuous" (the usual spline
/// convention); it shows up when comparing pieces with a jump.
class Smoothness {
 public:
  Smoothness() : k_(kUnbounded) {}

  static Smoothness unbounded() { return Smoothness(); }
  static Smoothness finite(int k) {
    if (k < -1) throw ParameterError("Smoothness: class below -1");
    Smoothness s;
    s.k_ = k;
    return s;
  }

  bool is_unbounded() const { return k_ == kUnbounded; }
  bool is_finite() const { return !is_unbounded(); }

  int value() const {
    if (is_unbounded()) throw ParameterError("Smoothness::value: unbounded class");
    return k_;
  }

  /// True when the class admits derivatives of order k.
  bool at_least(int k) const { return is_unbounded() || k_ >= k; }

  friend bool operator==(const Smoothness& a, const Smoothness& b) { return a.k_ == b.k_; }
  friend bool operator!=(const Smoothness& a, const Smoothness& b) { return a.k_ != b.k_; }
  friend bool operator<(const Smoothness& a, const Smoothness& b) {
    if (a.is_unbounded()) return false;
    if (b.is_unbounded()) return true;
    return a.k_ < b.k_;
  }

  static Smoothness min(const Smoothness& a, const Smoothness& b) { return a < b ? a : b; }

  std::string str() const { return is_unbounded() ? "C^inf" : "C^" + std::to_string(k_); }

 private:
  static constexpr int kUnbounded = -2;
  int k_;
};

}  // namespace jetop
