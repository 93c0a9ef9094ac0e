#pragma once

#include "mumode/matrix.hpp"

namespace mumode::la {

using core::cplx;
using core::index_t;
using core::Matrix;

enum class Op : char { None = 'N', Trans = 'T', ConjTrans = 'C' };

/// C = op(A) * op(B) on raw column-major buffers. m, n, k are the dimensions
/// of the mathematical product: op(A) is m x k, op(B) is k x n, C is m x n.
void gemm_raw(Op opA, Op opB, index_t m, index_t n, index_t k, const double* A,
              index_t lda, const double* B, index_t ldb, double* C, index_t ldc);
void gemm_raw(Op opA, Op opB, index_t m, index_t n, index_t k, const cplx* A,
              index_t lda, const cplx* B, index_t ldb, cplx* C, index_t ldc);

/// Matrix product op(A) * op(B). Value-level contract only; delegates to a
/// platform-optimized BLAS.
template <class T>
Matrix<T> gemm(const Matrix<T>& A, const Matrix<T>& B, Op opA = Op::None,
               Op opB = Op::None) {
  const index_t m = (opA == Op::None) ? A.rows() : A.cols();
  const index_t ka = (opA == Op::None) ? A.cols() : A.rows();
  const index_t kb = (opB == Op::None) ? B.rows() : B.cols();
  const index_t n = (opB == Op::None) ? B.cols() : B.rows();
  if (ka != kb) throw core::SizeError("gemm: inner dimensions do not match");
  Matrix<T> C(m, n);
  gemm_raw(opA, opB, m, n, ka, A.data(), A.rows(), B.data(), B.rows(), C.data(), m);
  return C;
}

/// X := op(A)^-1 * X for triangular A stored in a full column-major buffer.
/// `lower` selects the triangle, `unit_diag` treats the diagonal as ones.
void trsm_left_raw(bool lower, bool unit_diag, index_t n, index_t nrhs,
                   const double* A, index_t lda, double* X, index_t ldx);
void trsm_left_raw(bool lower, bool unit_diag, index_t n, index_t nrhs,
                   const cplx* A, index_t lda, cplx* X, index_t ldx);

/// Name of the BLAS kernel family in use (diagnostic).
const char* blas_kernel_name();

}  // namespace mumode::la
