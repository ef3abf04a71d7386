#include "jetop/random.hpp"

namespace jetop {

Rational random_rational(SplitMix64& rng, int max_abs, int max_den) {
  const long den = rng.next_int(1, max_den);
  const long num = rng.next_int(-max_abs * static_cast<int>(den), max_abs * static_cast<int>(den));
  return Rational(num, den);
}

Rational random_nonzero_rational(SplitMix64& rng, int max_abs, int max_den) {
  while (true) {
    Rational q = random_rational(rng, max_abs, max_den);
    if (!q.is_zero()) return q;
  }
}

namespace {

MultiIndex random_multi_index(SplitMix64& rng, int dim, int min_degree, int max_degree) {
  const int target = rng.next_int(min_degree, max_degree);
  Eigen::ArrayXi e = Eigen::ArrayXi::Zero(dim);
  for (int k = 0; k < target; ++k) e[static_cast<int>(rng.next_below(dim))] += 1;
  return MultiIndex(e);
}

}  // namespace

Polynomial<Rational> random_polynomial(SplitMix64& rng, int dim, int max_degree, int terms,
                                       int max_abs) {
  Polynomial<Rational> p(dim, max_degree);
  for (int t = 0; t < terms; ++t)
    p.add_to_coeff(random_multi_index(rng, dim, 0, max_degree), random_rational(rng, max_abs));
  return p;
}

Polynomial<Rational> random_flat_polynomial(SplitMix64& rng, int dim, int flat_order,
                                            int extra_degree, int terms, int max_abs) {
  const int lo = flat_order + 1;
  const int hi = flat_order + std::max(1, extra_degree);
  Polynomial<Rational> p(dim, hi);
  for (int t = 0; t < terms; ++t)
    p.add_to_coeff(random_multi_index(rng, dim, lo, hi), random_rational(rng, max_abs));
  return p;
}

DiffOperator random_operator(SplitMix64& rng, int dim, int max_order, int min_order,
                             int coeff_degree, int max_abs) {
  DiffOperator op(dim, max_order);
  // the anchor coefficient guarantees the requested minimum order
  MultiIndex anchor = random_multi_index(rng, dim, min_order, max_order);
  Polynomial<Rational> a(dim, coeff_degree);
  a.add_to_coeff(random_multi_index(rng, dim, 0, coeff_degree),
                 random_nonzero_rational(rng, max_abs));
  op.set_coefficient(anchor, a);

  const int extra = rng.next_int(0, 3);
  for (int t = 0; t < extra; ++t) {
    const MultiIndex alpha = random_multi_index(rng, dim, 0, max_order);
    if (alpha == anchor) continue;  // keep the guaranteed-nonzero anchor
    op.set_coefficient(alpha, random_polynomial(rng, dim, coeff_degree, 2, max_abs));
  }
  return op;
}

}  // namespace jetop
