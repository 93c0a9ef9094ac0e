#pragma once

#include <vector>

#include "mumode/matrix.hpp"
#include "mumode/quadrature.hpp"

namespace mumode::basis {

using core::index_t;
using core::Matrix;

/// Values of the normalized scaled Hermite functions
///   H^beta_i(x) = sqrt(beta/(sqrt(pi) 2^(i-1) (i-1)!)) H_(i-1)(beta x) exp(-(beta x)^2/2)
/// at (row i-1, col k) for i = 1..m. Evaluated by the three-term recurrence
/// on the damped normalized functions, never through raw polynomials.
Matrix<double> hermite_basis_matrix(index_t m, double beta, const std::vector<double>& x);

/// Values of the normalized scaled generalized Laguerre functions
///   L^(alpha,beta)_i(x) = sqrt(beta (i-1)!/Gamma(i+alpha)) L^alpha_(i-1)(beta x)
///                         (beta x)^(alpha/2) exp(-beta x/2)
/// at (row i-1, col k); x < 0 is a domain error, x = 0 gives 0 for alpha > 0.
Matrix<double> laguerre_basis_matrix(index_t m, double alpha, double beta,
                                     const std::vector<double>& x);

/// Everything one direction of a pseudospectral transform needs: the scaled
/// rule, the analysis matrix Psi at the quadrature nodes, the diagonal
/// transform weights omega making Psi diag(omega) Psi^T = I, and the
/// synthesis matrix Phi at the evaluation points.
struct BasisPlan {
  QuadRule rule;
  Matrix<double> psi;                      // m x m, (i,k) = phi_i(xi_k)
  std::vector<double> transform_weights;   // omega_k, length m
  Matrix<double> phi;                      // n x m, (l,i) = phi_i(x_l)
  double beta;
  double alpha;  // Laguerre exponent; unused for Hermite plans
};

/// Hermite plan with the scaling law beta = sqrt(2m+1)/b (nodes inside [-b,b]).
BasisPlan hermite_plan(index_t m, double b, const std::vector<double>& eval_points);

/// Generalized Laguerre plan with beta = (4m+2 alpha+2)/b; the scaling
/// estimate assumes |alpha| >= 1/4 and alpha > -1 and warns outside that range.
BasisPlan laguerre_plan(index_t m, double alpha, double b,
                        const std::vector<double>& eval_points);

}  // namespace mumode::basis
