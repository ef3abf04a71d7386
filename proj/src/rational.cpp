#include "jetop/rational.hpp"

#include <cmath>
#include <ostream>

namespace jetop {

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw ParameterError("Rational::from_double: non-finite value");
  mpq_class q(x);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParameterError("Rational::from_string: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw ParameterError("Rational::from_string: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.v_.get_str(); }

}  // namespace jetop
