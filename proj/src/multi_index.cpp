#include "jetop/multi_index.hpp"

#include <mutex>
#include <utility>

namespace jetop {

MultiIndex::MultiIndex(Eigen::ArrayXi exponents) : e_(std::move(exponents)) {
  if (e_.size() == 0) throw DimensionError("MultiIndex: dimension must be >= 1");
  if ((e_ < 0).any()) throw ParameterError("MultiIndex: negative exponent");
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(Eigen::Map<const Eigen::ArrayXi>(exponents.begin(),
                                                  static_cast<Eigen::Index>(exponents.size()))
                     .eval()) {}

MultiIndex MultiIndex::unit(int dim, int axis, int power) {
  Eigen::ArrayXi e = Eigen::ArrayXi::Zero(dim);
  if (axis < 0 || axis >= dim) throw DimensionError("MultiIndex::unit: axis out of range");
  e[axis] = power;
  return MultiIndex(e);
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw DimensionError("MultiIndex: comparing different dimensions");
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

int degree(const MultiIndex& alpha) { return alpha.exponents().sum(); }

mpz_class factorial(const MultiIndex& alpha) {
  mpz_class out = 1;
  for (int i = 0; i < alpha.dim(); ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(alpha[i]));
    out *= f;
  }
  return out;
}

bool leq(const MultiIndex& beta, const MultiIndex& alpha) {
  if (beta.dim() != alpha.dim()) throw DimensionError("leq: dimension mismatch");
  return (beta.exponents() <= alpha.exponents()).all();
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) throw DimensionError("MultiIndex+: dimension mismatch");
  return MultiIndex((a.exponents() + b.exponents()).eval());
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (!leq(b, a)) throw ParameterError("MultiIndex-: subtrahend not componentwise <=");
  return MultiIndex((a.exponents() - b.exponents()).eval());
}

MonomialDerivative monomial_derivative(const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha.dim() != beta.dim()) throw DimensionError("monomial_derivative: dimension mismatch");
  if (!leq(beta, alpha)) return {mpz_class(0), MultiIndex::zero(alpha.dim())};
  mpz_class coeff = 1;
  for (int i = 0; i < alpha.dim(); ++i) {
    // falling factorial alpha_i * (alpha_i - 1) * ... * (alpha_i - beta_i + 1)
    for (int k = 0; k < beta[i]; ++k) coeff *= (alpha[i] - k);
  }
  return {coeff, alpha - beta};
}

namespace {

void compositions_of(int total, int dim, Eigen::ArrayXi& scratch, int pos,
                     std::vector<MultiIndex>& out) {
  if (pos == dim - 1) {
    scratch[pos] = total;
    out.emplace_back(Eigen::ArrayXi(scratch));
    return;
  }
  for (int v = 0; v <= total; ++v) {
    scratch[pos] = v;
    compositions_of(total - v, dim, scratch, pos + 1, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_up_to(int dim, int max_degree) {
  if (dim < 1) throw DimensionError("multi_indices_up_to: dimension must be >= 1");
  if (max_degree < 0) throw ParameterError("multi_indices_up_to: negative degree");
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(basis_size(dim, max_degree)));
  Eigen::ArrayXi scratch = Eigen::ArrayXi::Zero(dim);
  for (int d = 0; d <= max_degree; ++d) compositions_of(d, dim, scratch, 0, out);
  return out;
}

long basis_size(int dim, int max_degree) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(dim + max_degree),
               static_cast<unsigned long>(dim));
  return b.get_si();
}

MonomialBasis::MonomialBasis(int dim, int max_degree)
    : dim_(dim), max_degree_(max_degree), indices_(multi_indices_up_to(dim, max_degree)) {
  for (int i = 0; i < size(); ++i) rank_.emplace(indices_[i], i);
}

int MonomialBasis::rank_of(const MultiIndex& alpha) const {
  if (alpha.dim() != dim_) throw DimensionError("MonomialBasis::rank_of: dimension mismatch");
  auto it = rank_.find(alpha);
  return it == rank_.end() ? -1 : it->second;
}

std::shared_ptr<const MonomialBasis> monomial_basis(int dim, int max_degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(dim, max_degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const MonomialBasis>(dim, max_degree);
  cache.emplace(key, basis);
  return basis;
}

}  // namespace jetop
