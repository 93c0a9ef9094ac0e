#pragma once

#include <vector>

#include "mumode/shape.hpp"

namespace mumode::basis {

using core::index_t;

/// Gaussian rule in coordinate units: nodes xi_k and positive weights w_k.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Scaled Gauss-Hermite rule: integrates f against exp(-(beta x)^2) on R.
/// Nodes are the classical Hermite nodes divided by beta (contained in
/// [-b,b] when beta = sqrt(2m+1)/b); weights sum to sqrt(pi)/beta.
QuadRule gauss_hermite(index_t m, double beta);

/// Scaled generalized Gauss-Laguerre rule: integrates f against
/// x^alpha exp(-beta x) on (0,inf); weights sum to Gamma(alpha+1)/beta^(alpha+1).
QuadRule gauss_laguerre_generalized(index_t m, double alpha, double beta);

}  // namespace mumode::basis
