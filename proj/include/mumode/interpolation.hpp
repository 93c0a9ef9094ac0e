#pragma once

#include <functional>
#include <vector>

#include "mumode/report.hpp"
#include "mumode/tensor.hpp"

namespace mumode::apps {

using core::index_t;
using core::Tensor;

/// Scalar field on [-1,1]^d; the argument holds the point's coordinates.
using PointFn = std::function<double(const std::vector<double>&)>;

/// d-variate Runge function 1/(1 + 16 sum_mu x_mu^2).
double runge_function(const std::vector<double>& x);

struct InterpResult {
  Tensor<double> values;  // interpolant samples on the evaluation grid
  double error_inf_relative = 0.0;
  SolverReport report;
};

/// Polynomial interpolation on the Chebyshev Cartesian grid: samples f at
/// the per-direction Chebyshev points, applies the barycentric evaluation
/// matrices as one Tucker operator, and measures the max-norm relative
/// error on the n^d uniform grid of [-1,1]^d.
InterpResult lagrange_interp(const PointFn& f, const std::vector<index_t>& m, index_t n);

/// Peak-memory estimate in bytes for lagrange_interp (the sample tensor
/// plus the largest intermediate of the fused Tucker pass).
index_t lagrange_interp_bytes(const std::vector<index_t>& m, index_t n);

}  // namespace mumode::apps
