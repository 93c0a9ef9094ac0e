#include "mumode/bases.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "mumode/errors.hpp"

namespace mumode::basis {
namespace {

/// omega_k = 1 / (m Psi(m-1,k)^2): the last-row identity for Gauss-Hermite
/// weights, evaluated through the damped recurrence so it keeps full
/// relative accuracy even where the raw weight underflows.
std::vector<double> hermite_transform_weights(const Matrix<double>& psi) {
  const index_t m = psi.rows();
  std::vector<double> w(static_cast<std::size_t>(m));
  for (index_t k = 0; k < m; ++k) {
    const double last = psi(m - 1, k);
    w[static_cast<std::size_t>(k)] = 1.0 / (double(m) * last * last);
  }
  return w;
}

/// omega_k = beta xi_k / (m (m+alpha) Psi(m-1,k)^2), the Laguerre analogue.
std::vector<double> laguerre_transform_weights(const Matrix<double>& psi,
                                               const std::vector<double>& nodes,
                                               double alpha, double beta) {
  const index_t m = psi.rows();
  std::vector<double> w(static_cast<std::size_t>(m));
  for (index_t k = 0; k < m; ++k) {
    const double last = psi(m - 1, k);
    w[static_cast<std::size_t>(k)] =
        beta * nodes[static_cast<std::size_t>(k)] /
        (double(m) * (double(m) + alpha) * last * last);
  }
  return w;
}

}  // namespace

Matrix<double> hermite_basis_matrix(index_t m, double beta, const std::vector<double>& x) {
  if (m < 1) throw core::ArgumentError("hermite_basis_matrix: m must be positive");
  const double sqrt_beta = std::sqrt(beta);
  const double psi0_scale = std::pow(std::numbers::pi, -0.25);
  Matrix<double> H(m, static_cast<index_t>(x.size()));
  for (index_t k = 0; k < H.cols(); ++k) {
    const double u = beta * x[static_cast<std::size_t>(k)];
    double prev = 0.0;
    double cur = psi0_scale * std::exp(-0.5 * u * u);
    H(0, k) = sqrt_beta * cur;
    for (index_t n = 0; n + 1 < m; ++n) {
      const double next = u * std::sqrt(2.0 / double(n + 1)) * cur -
                          std::sqrt(double(n) / double(n + 1)) * prev;
      prev = cur;
      cur = next;
      H(n + 1, k) = sqrt_beta * cur;
    }
  }
  return H;
}

Matrix<double> laguerre_basis_matrix(index_t m, double alpha, double beta,
                                     const std::vector<double>& x) {
  if (m < 1) throw core::ArgumentError("laguerre_basis_matrix: m must be positive");
  if (!(alpha > -1.0))
    throw core::ArgumentError("laguerre_basis_matrix: alpha must exceed -1");
  const double sqrt_beta = std::sqrt(beta);
  const double inv_sqrt_gamma = 1.0 / std::sqrt(std::tgamma(alpha + 1.0));
  Matrix<double> L(m, static_cast<index_t>(x.size()));
  for (index_t k = 0; k < L.cols(); ++k) {
    const double xk = x[static_cast<std::size_t>(k)];
    if (xk < 0.0)
      throw core::ArgumentError("laguerre_basis_matrix: negative evaluation point");
    const double u = beta * xk;
    double prev = 0.0;
    double cur = inv_sqrt_gamma * std::pow(u, 0.5 * alpha) * std::exp(-0.5 * u);
    L(0, k) = sqrt_beta * cur;
    for (index_t n = 0; n + 1 < m; ++n) {
      const double a = (2.0 * double(n) + alpha + 1.0 - u) /
                       std::sqrt(double(n + 1) * (double(n + 1) + alpha));
      const double b = std::sqrt(double(n) * (double(n) + alpha) /
                                 (double(n + 1) * (double(n + 1) + alpha)));
      const double next = a * cur - b * prev;
      prev = cur;
      cur = next;
      L(n + 1, k) = sqrt_beta * cur;
    }
  }
  return L;
}

BasisPlan hermite_plan(index_t m, double b, const std::vector<double>& eval_points) {
  BasisPlan plan;
  plan.beta = std::sqrt(2.0 * double(m) + 1.0) / b;
  plan.alpha = 0.0;
  plan.rule = gauss_hermite(m, plan.beta);
  plan.psi = hermite_basis_matrix(m, plan.beta, plan.rule.nodes);
  plan.transform_weights = hermite_transform_weights(plan.psi);
  plan.phi = core::transpose(hermite_basis_matrix(m, plan.beta, eval_points));
  return plan;
}

BasisPlan laguerre_plan(index_t m, double alpha, double b,
                        const std::vector<double>& eval_points) {
  if (!(std::abs(alpha) >= 0.25 && alpha > -1.0))
    std::cerr << "laguerre_plan: scaling estimate assumes |alpha| >= 1/4 and "
                 "alpha > -1; alpha = "
              << alpha << " is outside that range\n";
  BasisPlan plan;
  plan.beta = (4.0 * double(m) + 2.0 * alpha + 2.0) / b;
  plan.alpha = alpha;
  plan.rule = gauss_laguerre_generalized(m, alpha, plan.beta);
  plan.psi = laguerre_basis_matrix(m, alpha, plan.beta, plan.rule.nodes);
  plan.transform_weights =
      laguerre_transform_weights(plan.psi, plan.rule.nodes, alpha, plan.beta);
  plan.phi = core::transpose(laguerre_basis_matrix(m, alpha, plan.beta, eval_points));
  return plan;
}

}  // namespace mumode::basis
