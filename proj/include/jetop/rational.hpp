#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "jetop/errors.hpp"

namespace jetop {

/// Arbitrary-precision rational scalar.
///
/// Thin eager wrapper over GMP's mpq_class: every operation returns a
/// canonicalized value, so the type composes with Eigen's generic code
/// without expression-template surprises. Serializes as "p" or "p/q".
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}          // NOLINT: implicit by design
  Rational(long n) : v_(n) {}         // NOLINT
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw ParameterError("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Exact conversion: every finite double is a dyadic rational.
  static Rational from_double(double x);

  /// Parses "p", "-p", or "p/q".
  static Rational from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ParameterError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& q) { return q.abs(); }

/// Per-scalar behavior shared by the dual-mode (exact / floating) code paths.
template <class Scalar>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static Rational from_integer(const mpz_class& z) { return Rational(z); }
  static double to_double(const Rational& q) { return q.to_double(); }
  static bool negligible(const Rational& q, double /*tol*/) { return q.is_zero(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static double from_integer(const mpz_class& z) { return z.get_d(); }
  static double to_double(double x) { return x; }
  static bool negligible(double x, double tol) { return std::abs(x) <= tol; }
};

}  // namespace jetop

namespace Eigen {

template <>
struct NumTraits<jetop::Rational> : GenericNumTraits<jetop::Rational> {
  typedef jetop::Rational Real;
  typedef jetop::Rational NonInteger;
  typedef jetop::Rational Nested;
  typedef jetop::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64,
  };
  static inline Real epsilon() { return jetop::Rational(0); }
  static inline Real dummy_precision() { return jetop::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace jetop {

template <class Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using VecQ = VecX<Rational>;

inline Eigen::VectorXd to_double(const VecQ& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].to_double();
  return out;
}

inline VecQ to_rational(const Eigen::VectorXd& v) {
  VecQ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rational::from_double(v[i]);
  return out;
}

}  // namespace jetop
