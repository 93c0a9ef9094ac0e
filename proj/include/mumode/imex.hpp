#pragma once

#include <utility>

#include "mumode/evolution.hpp"

namespace mumode::apps {

/// Linear-solve backend for the implicit half of the marching scheme
/// (I - tau Laplace) u_{k+1} = u_k + tau f(t_k, u_k):
///   Direct    - per-mode eigendecomposition of the symmetric tridiagonal
///               factors, built once; each solve is two Tucker applications
///               and an elementwise division (the assembled operator would
///               not fit in memory at the experiment sizes);
///   CgVector  - conjugate gradient on the sparse assembled Kronecker sum;
///   CgTensor  - conjugate gradient on the matrix-free Kronecker-sum action;
///   PcgTensor - CgTensor preconditioned by inverse-Tucker solves with the
///               factored P_mu = I - tau A_mu.
enum class ImexBackend { Direct, CgVector, CgTensor, PcgTensor };

/// First-order implicit-explicit march to t_final with constant step tau
/// (stiff linear part implicit, nonlinearity explicit, warm-started inner
/// solves). For the manufactured semilinear problem the report's error is
/// measured against the exact solution e^{t*} u0.
std::pair<Tensor<double>, SolverReport> imex_evolve(const EvolutionProblem& prob,
                                                    ImexBackend backend,
                                                    double tol = 1e-8,
                                                    core::index_t maxit = 1000);

}  // namespace mumode::apps
