#include "mumode/spectral.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "mumode/dft.hpp"
#include "mumode/errors.hpp"
#include "mumode/gemm.hpp"
#include "mumode/tucker.hpp"

namespace mumode::apps {
namespace {

using core::cplx;
using core::Shape;

std::vector<double> linspace_closed(double a, double b, index_t n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  if (n == 1) {
    x[0] = a;
    return x;
  }
  for (index_t l = 0; l < n; ++l)
    x[static_cast<std::size_t>(l)] = a + (b - a) * double(l) / double(n - 1);
  return x;
}

double f_target(double x1, double x2, double x3) {
  return x2 * x2 * std::sin(20.0 * x1) * std::sin(10.0 * x2) *
         std::exp(-x1 * x1 - 2.0 * x2) / (std::sin(2.0 * std::numbers::pi * x3) + 2.0);
}

ops::ColumnOperator<double> matmul_operator(const Matrix<double>& M) {
  return {M.rows(), [&M](const Matrix<double>& X) { return la::gemm(M, X); }};
}

ops::ColumnOperator<double> identity_operator(index_t rows) {
  return {rows, [](const Matrix<double>& X) { return X; }};
}

}  // namespace

Matrix<double> fourier_resample(index_t m, const std::vector<double>& eval_points,
                                double a, double b) {
  la::DftPair pair = la::dft_matrices(m, m, a, b);
  Matrix<cplx> S = la::dft_synthesis_at(m, eval_points, a, b);
  Matrix<cplx> R = la::gemm(S, pair.analysis);
  Matrix<double> out(R.rows(), R.cols());
  for (std::size_t k = 0; k < R.storage().size(); ++k) {
    if (std::abs(R.storage()[k].imag()) > 1e-10)
      throw core::NumericalError("fourier_resample: resample matrix is not real");
    out.storage()[k] = R.storage()[k].real();
  }
  return out;
}

Tensor<double> hlf_analysis(const Tensor<double>& fw_weighted,
                            const basis::BasisPlan& plan1, const basis::BasisPlan& plan2) {
  if (fw_weighted.order() != 3)
    throw core::SizeError("hlf_analysis: expected an order-3 sample tensor");
  ops::OperatorStack<double> stack;
  stack.push_back(matmul_operator(plan1.psi));
  stack.push_back(matmul_operator(plan2.psi));
  stack.push_back(identity_operator(fw_weighted.extent(3)));
  return ops::tuckerfun(fw_weighted, stack);
}

Tensor<double> hlf_synthesis(const Tensor<double>& fhat, const basis::BasisPlan& plan1,
                             const basis::BasisPlan& plan2,
                             const Matrix<double>& resample3) {
  if (fhat.order() != 3)
    throw core::SizeError("hlf_synthesis: expected an order-3 coefficient tensor");
  ops::OperatorStack<double> stack;
  stack.push_back(matmul_operator(plan1.phi));
  stack.push_back(matmul_operator(plan2.phi));
  stack.push_back(matmul_operator(resample3));
  return ops::tuckerfun(fhat, stack);
}

HlfResult hlf_experiment(index_t m1, index_t m2, index_t m3, double alpha, double b1,
                         double b2, double b3, double a3, index_t n) {
  const auto x1e = linspace_closed(-b1, b1, n);
  const auto x2e = linspace_closed(0.0, b2, n);
  const auto x3e = linspace_closed(a3, b3, n);

  const auto t0 = std::chrono::steady_clock::now();

  basis::BasisPlan plan1 = basis::hermite_plan(m1, b1, x1e);
  basis::BasisPlan plan2 = basis::laguerre_plan(m2, alpha, b2, x2e);
  std::vector<double> xi3(static_cast<std::size_t>(m3));
  for (index_t k = 0; k < m3; ++k)
    xi3[static_cast<std::size_t>(k)] = a3 + (b3 - a3) * double(k) / double(m3);
  Matrix<double> R = fourier_resample(m3, x3e, a3, b3);

  // Samples on the quadrature grid, pre-multiplied by the transform weights
  // (the Fourier direction's uniform weight is already inside the analysis).
  Tensor<double> fw(Shape({m1, m2, m3}));
  {
    index_t idx = 0;
    for (index_t k3 = 0; k3 < m3; ++k3)
      for (index_t k2 = 0; k2 < m2; ++k2)
        for (index_t k1 = 0; k1 < m1; ++k1, ++idx)
          fw[idx] = f_target(plan1.rule.nodes[static_cast<std::size_t>(k1)],
                             plan2.rule.nodes[static_cast<std::size_t>(k2)],
                             xi3[static_cast<std::size_t>(k3)]) *
                    plan1.transform_weights[static_cast<std::size_t>(k1)] *
                    plan2.transform_weights[static_cast<std::size_t>(k2)];
  }

  Tensor<double> fhat = hlf_analysis(fw, plan1, plan2);
  Tensor<double> ft = hlf_synthesis(fhat, plan1, plan2, R);

  const auto t1 = std::chrono::steady_clock::now();

  double diff = 0.0, scale = 0.0;
  index_t idx = 0;
  for (index_t l3 = 0; l3 < n; ++l3)
    for (index_t l2 = 0; l2 < n; ++l2)
      for (index_t l1 = 0; l1 < n; ++l1, ++idx) {
        const double exact = f_target(x1e[static_cast<std::size_t>(l1)],
                                      x2e[static_cast<std::size_t>(l2)],
                                      x3e[static_cast<std::size_t>(l3)]);
        diff = std::max(diff, std::abs(ft[idx] - exact));
        scale = std::max(scale, std::abs(exact));
      }

  HlfResult res;
  res.accuracy = diff / scale;
  res.report.error_inf_relative = res.accuracy;
  res.report.wall_time_seconds = std::chrono::duration<double>(t1 - t0).count();
  return res;
}

}  // namespace mumode::apps
