#pragma once

#include "mumode/matrix.hpp"

namespace mumode::la {

/// Dense discrete-Fourier pair for trigonometric resampling on [a,b).
/// analysis (m x m) maps samples at the m equispaced points a+(b-a)j/m to
/// coefficients; synthesis (n x m) evaluates the interpolant at the n
/// equispaced points a+(b-a)l/n. For even m the Nyquist column is split
/// symmetrically (a cosine), so real samples resample to real values.
struct DftPair {
  core::Matrix<core::cplx> analysis;
  core::Matrix<core::cplx> synthesis;
};

DftPair dft_matrices(core::index_t m, core::index_t n, double a, double b);

/// Synthesis rows for arbitrary evaluation points (same column convention).
core::Matrix<core::cplx> dft_synthesis_at(core::index_t m, const std::vector<double>& x,
                                          double a, double b);

}  // namespace mumode::la
