#pragma once

#include <vector>

#include "mumode/bases.hpp"
#include "mumode/report.hpp"
#include "mumode/tensor.hpp"

namespace mumode::apps {

using core::index_t;
using core::Matrix;
using core::Tensor;

/// Real trigonometric resampling matrix from m equispaced samples on [a,b)
/// to arbitrary points: the real part of synthesis times analysis (exactly
/// real for real inputs thanks to the symmetric Nyquist split).
Matrix<double> fourier_resample(index_t m, const std::vector<double>& eval_points,
                                double a, double b);

/// Forward pseudospectral transform of a Hermite x Laguerre x Fourier grid:
/// applies Psi_1 and Psi_2 and leaves mode 3 alone (its coefficient
/// extraction is deferred to the resampling step). The caller pre-multiplies
/// the sample tensor by the transform weights.
Tensor<double> hlf_analysis(const Tensor<double>& fw_weighted,
                            const basis::BasisPlan& plan1, const basis::BasisPlan& plan2);

/// Evaluates the coefficient tensor on the evaluation grid: Phi_1, Phi_2,
/// and the mode-3 trigonometric resample.
Tensor<double> hlf_synthesis(const Tensor<double>& fhat, const basis::BasisPlan& plan1,
                             const basis::BasisPlan& plan2,
                             const Matrix<double>& resample3);

struct HlfResult {
  double accuracy = 0.0;  // max-norm relative reconstruction error
  SolverReport report;
};

/// Full Hermite-Laguerre-Fourier approximation experiment on
/// [-b1,b1] x [0,b2] x [a3,b3] with n^3 uniform evaluation points.
HlfResult hlf_experiment(index_t m1, index_t m2, index_t m3, double alpha = 4.0,
                         double b1 = 4.0, double b2 = 11.0, double b3 = 1.0,
                         double a3 = -1.0, index_t n = 301);

}  // namespace mumode::apps
