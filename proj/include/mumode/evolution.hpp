#pragma once

#include <utility>
#include <vector>

#include "mumode/report.hpp"
#include "mumode/stencils.hpp"
#include "mumode/tensor.hpp"

namespace mumode::apps {

using core::index_t;
using core::Tensor;

enum class GridKind { Uniform, Chebyshev, Quadrature };

/// Cartesian grid description, first index fastest.
struct GridSpec {
  std::vector<index_t> extents;
  std::vector<std::pair<double, double>> intervals;
  GridKind kind = GridKind::Uniform;
};

enum class NonlinearTerm { None, SemilinearForced };

/// d-dimensional evolution problem du/dt = (A_d + ... + A_1) u [+ f(t,u)]
/// on the tensorized interior grid of the per-direction stencils.
struct EvolutionProblem {
  std::vector<basis::StencilMatrix> stencils;
  Tensor<double> u0;
  double t_final = 0.0;
  double tau = 0.0;  // marching step for the semilinear solver
  NonlinearTerm nonlinearity = NonlinearTerm::None;
};

/// Exact linear solution at t_final: one Tucker application of the d
/// small mode exponentials exp(t* A_mu); no substepping.
Tensor<double> linear_evolution_exact(const EvolutionProblem& prob);

/// Right-hand-side formulation for RK4: tensor evaluates the Kronecker-sum
/// action mode-wise, vector multiplies by the assembled sum (small sizes).
enum class RkForm { Tensor, Vector };

Tensor<double> rk4_evolve(const EvolutionProblem& prob, index_t steps,
                          RkForm form = RkForm::Tensor);

/// Forcing that makes u(t,x) = e^t u0(x) the exact solution of
/// u_t = Laplace(u) + 1/(1+u^2) + Phi with u0 = prod_mu x_mu (1 - x_mu):
/// Phi = e^t u0 - e^t Laplace(u0) - 1/(1 + e^{2t} u0^2), all in closed form.
Tensor<double> manufactured_forcing(double t, const std::vector<std::vector<double>>& grids);

/// Advection-diffusion-absorption instance on (0,2]^d (per-direction
/// coefficient 2/3, diffusion strength 1/2, absorption 1/100) with
/// u0 = prod_mu x_mu (2 - x_mu)^2.
EvolutionProblem ada_problem(const std::vector<index_t>& dims, double t_final);

/// Semilinear heat instance on (0,1)^d with the manufactured forcing.
EvolutionProblem heat_semilinear_problem(const std::vector<index_t>& dims,
                                         double t_final, double tau);

}  // namespace mumode::apps
