#include "jetop/taylor.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>

namespace jetop {

QuadratureRule gauss_legendre_01(int n) {
  if (n < 1) throw ParameterError("gauss_legendre_01: need at least one node");

  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }

  // Jacobi matrix of the Legendre recurrence; eigenvalues are the nodes on
  // [-1, 1], weights come from the first components of the eigenvectors.
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double b = i / std::sqrt(4.0 * i * i - 1.0);
    J(i, i - 1) = b;
    J(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double xi = es.eigenvalues()[i];
    const double w = 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    rule.nodes[i] = 0.5 * (xi + 1.0);  // map [-1,1] -> [0,1]
    rule.weights[i] = 0.5 * w;
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, rule);
  return rule;
}

double taylor_remainder_quadrature(const SmoothFn<double>& f, const Eigen::VectorXd& a,
                                   const MultiIndex& beta, const Eigen::VectorXd& x, int nodes) {
  const int k1 = degree(beta);
  if (k1 < 1) throw ParameterError("taylor_remainder_quadrature: |beta| must be >= 1");
  if (!f.smoothness().at_least(k1))
    throw SmoothnessError("taylor_remainder_quadrature: f below class C^" + std::to_string(k1));

  const QuadratureRule rule = gauss_legendre_01(nodes);
  const Eigen::VectorXd dx = x - a;
  double acc = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = rule.nodes[i];
    const Eigen::VectorXd p = a + t * dx;
    acc += rule.weights[i] * std::pow(1.0 - t, k1 - 1) * derivative_at(f, beta, p);
  }
  return k1 / factorial(beta).get_d() * acc;
}

}  // namespace jetop
