#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <initializer_list>
#include <map>
#include <memory>
#include <vector>

#include "jetop/errors.hpp"

namespace jetop {

/// Exponent vector of a mixed partial derivative or monomial.
///
/// Entries are nonnegative; the length is the ambient dimension. Ordered
/// by total degree first, then lexicographically, which fixes the
/// enumeration order used throughout (coefficient extraction walks this
/// order, lowest degree first).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(Eigen::ArrayXi exponents);
  MultiIndex(std::initializer_list<int> exponents);

  static MultiIndex zero(int dim) { return MultiIndex(Eigen::ArrayXi::Zero(dim)); }
  static MultiIndex unit(int dim, int axis, int power = 1);

  int dim() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  const Eigen::ArrayXi& exponents() const { return e_; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.e_.size() == b.e_.size() && (a.e_ == b.e_).all();
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

  /// Graded-lexicographic strict order.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);

 private:
  Eigen::ArrayXi e_;
};

/// Total degree |alpha|.
int degree(const MultiIndex& alpha);

/// alpha! as an arbitrary-precision integer.
mpz_class factorial(const MultiIndex& alpha);

/// Componentwise beta <= alpha. Throws DimensionError on length mismatch.
bool leq(const MultiIndex& beta, const MultiIndex& alpha);

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

/// a - b; requires leq(b, a).
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

struct MonomialDerivative {
  mpz_class coefficient;  // 0 when the derivative kills the monomial
  MultiIndex exponent;    // alpha - beta, or the zero index when coefficient == 0
};

/// d^beta x^alpha = (alpha!/(alpha-beta)!) x^(alpha-beta) when beta <= alpha,
/// zero otherwise.
MonomialDerivative monomial_derivative(const MultiIndex& alpha, const MultiIndex& beta);

/// All multi-indices of dimension `dim` with degree <= `max_degree`, in
/// graded-lexicographic order. Count is C(dim + max_degree, dim).
std::vector<MultiIndex> multi_indices_up_to(int dim, int max_degree);

/// Number of multi-indices of dimension `dim` with degree <= `max_degree`.
long basis_size(int dim, int max_degree);

/// Graded-lexicographic basis with O(log) rank lookup; the dense index set
/// behind jets and polynomials.
class MonomialBasis {
 public:
  MonomialBasis(int dim, int max_degree);

  int dim() const { return dim_; }
  int max_degree() const { return max_degree_; }
  int size() const { return static_cast<int>(indices_.size()); }
  const MultiIndex& operator[](int rank) const { return indices_[rank]; }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  /// Rank of alpha within the basis; -1 when absent.
  int rank_of(const MultiIndex& alpha) const;

 private:
  int dim_;
  int max_degree_;
  std::vector<MultiIndex> indices_;
  std::map<MultiIndex, int> rank_;
};

/// Shared, cached basis instances (they are immutable and reused heavily).
std::shared_ptr<const MonomialBasis> monomial_basis(int dim, int max_degree);

}  // namespace jetop
