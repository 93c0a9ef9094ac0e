#pragma once

#include "mumode/matrix.hpp"

namespace mumode::la {

/// Matrix exponential by scaling-and-squaring with diagonal Pade
/// approximants of orders {3,5,7,9,13} selected by 1-norm thresholds.
core::Matrix<double> expm(const core::Matrix<double>& A);
core::Matrix<core::cplx> expm(const core::Matrix<core::cplx>& A);

}  // namespace mumode::la
