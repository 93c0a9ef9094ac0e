#include "mumode/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "mumode/errors.hpp"
#include "mumode/tridiag.hpp"

namespace mumode::basis {
namespace {

/// Golub-Welsch: eigen-decompose the Jacobi matrix; nodes are eigenvalues,
/// weights are mu0 times the squared first eigenvector components.
QuadRule golub_welsch(const la::TridiagSym& J, double mu0) {
  auto eig = la::symtridiag_eig(J, la::EigMode::FirstComponents);
  const index_t m = static_cast<index_t>(eig.values.size());
  QuadRule rule;
  rule.nodes = eig.values;
  rule.weights.resize(static_cast<std::size_t>(m));
  for (index_t k = 0; k < m; ++k) {
    const double v0 = eig.vectors(0, k);
    rule.weights[static_cast<std::size_t>(k)] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadRule gauss_hermite(index_t m, double beta) {
  if (m < 1) throw core::ArgumentError("gauss_hermite: m must be positive");
  if (!(beta > 0.0)) throw core::ArgumentError("gauss_hermite: beta must be positive");
  la::TridiagSym J;
  J.diag.assign(static_cast<std::size_t>(m), 0.0);
  J.offdiag.resize(static_cast<std::size_t>(m - 1));
  for (index_t k = 1; k < m; ++k)
    J.offdiag[static_cast<std::size_t>(k - 1)] = std::sqrt(double(k) / 2.0);
  QuadRule rule = golub_welsch(J, std::sqrt(std::numbers::pi));
  for (auto& x : rule.nodes) x /= beta;
  for (auto& w : rule.weights) w /= beta;
  return rule;
}

QuadRule gauss_laguerre_generalized(index_t m, double alpha, double beta) {
  if (m < 1) throw core::ArgumentError("gauss_laguerre_generalized: m must be positive");
  if (!(alpha > -1.0))
    throw core::ArgumentError("gauss_laguerre_generalized: alpha must exceed -1");
  if (!(beta > 0.0))
    throw core::ArgumentError("gauss_laguerre_generalized: beta must be positive");
  la::TridiagSym J;
  J.diag.resize(static_cast<std::size_t>(m));
  J.offdiag.resize(static_cast<std::size_t>(m - 1));
  for (index_t k = 1; k <= m; ++k)
    J.diag[static_cast<std::size_t>(k - 1)] = 2.0 * double(k) + alpha - 1.0;
  for (index_t k = 1; k < m; ++k)
    J.offdiag[static_cast<std::size_t>(k - 1)] = std::sqrt(double(k) * (double(k) + alpha));
  QuadRule rule = golub_welsch(J, std::tgamma(alpha + 1.0));
  const double wscale = std::pow(beta, alpha + 1.0);
  for (auto& x : rule.nodes) x /= beta;
  for (auto& w : rule.weights) w /= wscale;
  return rule;
}

}  // namespace mumode::basis
