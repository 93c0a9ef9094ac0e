#pragma once

#include <vector>

#include "mumode/matrix.hpp"

namespace mumode::la {

using core::index_t;
using core::Matrix;

/// Symmetric tridiagonal matrix: diag has m entries, offdiag has m-1.
struct TridiagSym {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

/// FirstComponents keeps only row one of the eigenvector matrix (all a
/// Golub-Welsch weight computation needs); FullVectors accumulates the
/// whole orthonormal basis (needed to diagonalize 1D operators).
enum class EigMode { FirstComponents, FullVectors };

struct SymEigResult {
  std::vector<double> values;  // ascending
  Matrix<double> vectors;      // 1 x m row, or m x m with eigenvector columns
};

/// Implicit-shift QL with Wilkinson shifts, iteration cap 50 per eigenvalue.
SymEigResult symtridiag_eig(const TridiagSym& T, EigMode mode = EigMode::FirstComponents);

}  // namespace mumode::la
