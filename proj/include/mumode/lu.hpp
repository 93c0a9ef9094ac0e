#pragma once

#include <cmath>
#include <vector>

#include "mumode/gemm.hpp"
#include "mumode/matrix.hpp"

namespace mumode::la {

using core::index_t;
using core::Matrix;
using core::SizeError;

/// LU factorization with partial pivoting, Doolittle form: P*A = L*U with
/// unit-diagonal L stored below the diagonal of `lu`.
template <class T>
struct LuFactors {
  Matrix<T> lu;
  std::vector<index_t> piv;  // piv[k] = row swapped into position k at step k
};

template <class T>
LuFactors<T> lu_factor(const Matrix<T>& A) {
  if (A.rows() != A.cols()) throw SizeError("lu_factor: matrix must be square");
  const index_t n = A.rows();
  LuFactors<T> f{A, std::vector<index_t>(static_cast<std::size_t>(n))};
  Matrix<T>& M = f.lu;
  for (index_t k = 0; k < n; ++k) {
    index_t p = k;
    double best = std::abs(M(k, k));
    for (index_t i = k + 1; i < n; ++i)
      if (std::abs(M(i, k)) > best) {
        best = std::abs(M(i, k));
        p = i;
      }
    if (best == 0.0) throw core::NumericalError("lu_factor: singular pivot");
    f.piv[static_cast<std::size_t>(k)] = p;
    if (p != k)
      for (index_t j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
    const T inv_pivot = T{1} / M(k, k);
    for (index_t i = k + 1; i < n; ++i) {
      const T m = M(i, k) * inv_pivot;
      M(i, k) = m;
      for (index_t j = k + 1; j < n; ++j) M(i, j) -= m * M(k, j);
    }
  }
  return f;
}

/// Multi-right-hand-side solve A*X = B using the precomputed factors: pivot
/// row swaps, then two triangular solves as level-3 BLAS calls.
template <class T>
Matrix<T> lu_solve(const LuFactors<T>& f, const Matrix<T>& B) {
  const index_t n = f.lu.rows();
  if (B.rows() != n) throw SizeError("lu_solve: right-hand side row count");
  Matrix<T> X = B;
  const index_t nrhs = B.cols();
  for (index_t k = 0; k < n; ++k) {
    const index_t p = f.piv[static_cast<std::size_t>(k)];
    if (p == k) continue;
    T* xk = X.data() + k;
    T* xp = X.data() + p;
    for (index_t j = 0; j < nrhs; ++j) std::swap(xk[j * n], xp[j * n]);
  }
  trsm_left_raw(true, true, n, nrhs, f.lu.data(), n, X.data(), n);
  trsm_left_raw(false, false, n, nrhs, f.lu.data(), n, X.data(), n);
  return X;
}

}  // namespace mumode::la
