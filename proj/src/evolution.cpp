#include "mumode/evolution.hpp"

#include <cmath>
#include <string>

#include "mumode/errors.hpp"
#include "mumode/expm.hpp"
#include "mumode/gemm.hpp"
#include "mumode/kron.hpp"
#include "mumode/tucker.hpp"

namespace mumode::apps {
namespace {

using core::Matrix;
using core::Shape;

ops::MatrixStack<double> stencil_stack(const EvolutionProblem& prob) {
  ops::MatrixStack<double> As;
  As.reserve(prob.stencils.size());
  for (const auto& st : prob.stencils) As.push_back(st.A);
  return As;
}

void check_problem(const EvolutionProblem& prob) {
  if (prob.stencils.empty()) throw core::ArgumentError("evolution: no stencils");
  if (static_cast<index_t>(prob.stencils.size()) != prob.u0.order())
    throw core::SizeError("evolution: stencil count does not match tensor order");
  for (index_t mu = 1; mu <= prob.u0.order(); ++mu)
    if (prob.stencils[static_cast<std::size_t>(mu - 1)].A.rows() != prob.u0.extent(mu))
      throw core::SizeError("evolution: stencil size does not match extent of mode " +
                            std::to_string(mu));
  if (!(prob.t_final > 0.0)) throw core::ArgumentError("evolution: t_final must be positive");
}

/// Outer product tensor prod_mu g_mu(x_mu) over the per-direction grids.
Tensor<double> separable_tensor(const std::vector<std::vector<double>>& factors) {
  std::vector<index_t> ext;
  ext.reserve(factors.size());
  for (const auto& f : factors) ext.push_back(static_cast<index_t>(f.size()));
  Tensor<double> t{Shape(ext)};
  const index_t d = t.order();
  std::vector<index_t> ji(static_cast<std::size_t>(d), 0);
  for (index_t flat = 0; flat < t.numel(); ++flat) {
    double v = 1.0;
    for (index_t mu = 0; mu < d; ++mu)
      v *= factors[static_cast<std::size_t>(mu)]
                  [static_cast<std::size_t>(ji[static_cast<std::size_t>(mu)])];
    t[flat] = v;
    for (index_t mu = 0; mu < d; ++mu) {
      auto& j = ji[static_cast<std::size_t>(mu)];
      if (++j < t.extent(mu + 1)) break;
      j = 0;
    }
  }
  return t;
}

std::vector<std::vector<double>> hump_factors(const std::vector<std::vector<double>>& grids) {
  std::vector<std::vector<double>> g(grids.size());
  for (std::size_t mu = 0; mu < grids.size(); ++mu) {
    g[mu].reserve(grids[mu].size());
    for (double x : grids[mu]) g[mu].push_back(x * (1.0 - x));
  }
  return g;
}

}  // namespace

Tensor<double> linear_evolution_exact(const EvolutionProblem& prob) {
  check_problem(prob);
  if (prob.nonlinearity != NonlinearTerm::None)
    throw core::ArgumentError("linear_evolution_exact: problem has a nonlinear term");
  ops::MatrixStack<double> Es;
  Es.reserve(prob.stencils.size());
  for (const auto& st : prob.stencils) {
    Matrix<double> tA = st.A;
    for (auto& v : tA.storage()) v *= prob.t_final;
    Es.push_back(la::expm(tA));
  }
  return ops::tucker(prob.u0, Es);
}

Tensor<double> rk4_evolve(const EvolutionProblem& prob, index_t steps, RkForm form) {
  check_problem(prob);
  if (prob.nonlinearity != NonlinearTerm::None)
    throw core::ArgumentError("rk4_evolve: only linear problems are supported");
  if (steps < 1) throw core::ArgumentError("rk4_evolve: steps must be positive");
  const double tau = prob.t_final / double(steps);
  ops::MatrixStack<double> As = stencil_stack(prob);

  std::function<Tensor<double>(const Tensor<double>&)> rhs;
  Matrix<double> big;
  if (form == RkForm::Vector) {
    const index_t N = prob.u0.numel();
    if (N * N > index_t{67108864})
      throw core::SizeError("rk4_evolve: assembled operator would need " +
                            std::to_string(N * N) + " entries; use the tensor form");
    big = kronref::kronsum(As);
    rhs = [&big](const Tensor<double>& v) {
      Matrix<double> x(v.numel(), 1);
      std::copy(v.storage().begin(), v.storage().end(), x.storage().begin());
      Matrix<double> y = la::gemm(big, x);
      return core::unvec(std::move(y.storage()), v.shape());
    };
  } else {
    rhs = [&As](const Tensor<double>& v) { return ops::kronsumv(v, As); };
  }

  auto axpy = [](Tensor<double> base, double a, const Tensor<double>& dir) {
    for (index_t k = 0; k < base.numel(); ++k) base[k] += a * dir[k];
    return base;
  };

  Tensor<double> u = prob.u0;
  for (index_t s = 0; s < steps; ++s) {
    Tensor<double> k1 = rhs(u);
    Tensor<double> k2 = rhs(axpy(u, tau / 2.0, k1));
    Tensor<double> k3 = rhs(axpy(u, tau / 2.0, k2));
    Tensor<double> k4 = rhs(axpy(u, tau, k3));
    for (index_t k = 0; k < u.numel(); ++k)
      u[k] += tau / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
  }
  return u;
}

Tensor<double> manufactured_forcing(double t, const std::vector<std::vector<double>>& grids) {
  if (grids.empty()) throw core::ArgumentError("manufactured_forcing: no grids");
  const auto g = hump_factors(grids);
  Tensor<double> u0 = separable_tensor(g);

  // Laplace(u0) = -2 sum_mu prod_{k != mu} x_k (1 - x_k), exactly.
  Tensor<double> lap(u0.shape());
  for (std::size_t mu = 0; mu < g.size(); ++mu) {
    auto ones = g;
    ones[mu].assign(ones[mu].size(), 1.0);
    Tensor<double> term = separable_tensor(ones);
    for (index_t k = 0; k < lap.numel(); ++k) lap[k] += -2.0 * term[k];
  }

  const double et = std::exp(t);
  Tensor<double> phi(u0.shape());
  for (index_t k = 0; k < phi.numel(); ++k) {
    const double eu = et * u0[k];
    phi[k] = et * u0[k] - et * lap[k] - 1.0 / (1.0 + eu * eu);
  }
  return phi;
}

EvolutionProblem ada_problem(const std::vector<index_t>& dims, double t_final) {
  EvolutionProblem prob;
  prob.t_final = t_final;
  std::vector<std::vector<double>> factors;
  for (index_t n : dims) {
    basis::StencilMatrix st = basis::ada_stencil(n, 2.0 / 3.0, 0.5, 0.01);
    std::vector<double> f;
    f.reserve(st.grid.size());
    for (double x : st.grid) f.push_back(x * (2.0 - x) * (2.0 - x));
    factors.push_back(std::move(f));
    prob.stencils.push_back(std::move(st));
  }
  prob.u0 = separable_tensor(factors);
  return prob;
}

EvolutionProblem heat_semilinear_problem(const std::vector<index_t>& dims,
                                         double t_final, double tau) {
  EvolutionProblem prob;
  prob.t_final = t_final;
  prob.tau = tau;
  prob.nonlinearity = NonlinearTerm::SemilinearForced;
  std::vector<std::vector<double>> grids;
  for (index_t n : dims) {
    basis::StencilMatrix st = basis::laplacian_stencil(n);
    grids.push_back(st.grid);
    prob.stencils.push_back(std::move(st));
  }
  prob.u0 = separable_tensor(hump_factors(grids));
  return prob;
}

}  // namespace mumode::apps
